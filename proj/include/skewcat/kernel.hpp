#ifndef SKEWCAT_KERNEL_HPP
#define SKEWCAT_KERNEL_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace skewcat {

// ---------------------------------------------------------------------------
// errors
// ---------------------------------------------------------------------------

enum class ErrCode {
  UnknownGenerator,
  UnknownObject,
  DuplicateName,
  LoosenOnLooseSide,
  IndexOutOfRange,
  ObjectMismatch,
  BoundaryKindMismatch,
  NotAForm,
  InfeasibleNormalForm,
  ArrowMismatch,
  CardinalityGuard,
  ArityBoundExceeded,
  AssignmentMismatch,
  HomMembership,
  ReferenceError,
  TypeMismatch,
  SyntaxError,
  TypeError,
  InterpretationGap,
  BadInput,
  Internal,
};

const char* err_name(ErrCode c);

class SkewError : public std::runtime_error {
 public:
  SkewError(ErrCode code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  ErrCode code() const { return code_; }

 private:
  ErrCode code_;
};

[[noreturn]] inline void fail(ErrCode code, const std::string& msg) {
  throw SkewError(code, msg);
}

// ---------------------------------------------------------------------------
// kinds and arrows
// ---------------------------------------------------------------------------

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "Left" : "Right"; }

// Morphism flavor: which ends of the input list are privileged.
struct Kind {
  bool left_tight = false;
  bool right_tight = false;

  constexpr bool operator==(const Kind&) const = default;
  int index() const { return (left_tight ? 2 : 0) + (right_tight ? 1 : 0); }
  bool tight(Side s) const { return s == Side::Left ? left_tight : right_tight; }

  const char* name() const {
    switch (index()) {
      case 0: return "LL";
      case 1: return "LT";
      case 2: return "TL";
      default: return "TT";
    }
  }
  static Kind parse(const std::string& s);
};

inline constexpr Kind kLL{false, false};
inline constexpr Kind kTL{true, false};
inline constexpr Kind kLT{false, true};
inline constexpr Kind kTT{true, true};
inline constexpr Kind kAllKinds[4] = {kLL, kTL, kLT, kTT};

using ObjectId = std::string;

struct Arrow {
  Kind kind;
  std::vector<ObjectId> domain;
  ObjectId codomain;

  bool operator==(const Arrow&) const = default;
  size_t arity() const { return domain.size(); }
  std::string encode() const;
};

// Kind the argument of a composition must have, per the boundary rule:
// the leftmost slot inherits the host's left flag, the rightmost its right
// flag, interior slots are loose on both sides.
inline Kind forced_argument_kind(const Kind& host, size_t host_arity, size_t i) {
  return Kind{i == 0 && host.left_tight, i + 1 == host_arity && host.right_tight};
}

// ---------------------------------------------------------------------------
// signatures
// ---------------------------------------------------------------------------

struct GeneratorDecl {
  std::string name;
  Arrow arrow;
};

class Signature {
 public:
  Signature() = default;
  Signature(std::vector<ObjectId> objects, std::vector<GeneratorDecl> generators);

  const std::vector<ObjectId>& objects() const { return objects_; }
  const std::vector<GeneratorDecl>& generators() const { return generators_; }
  bool has_object(const ObjectId& x) const { return object_set_.count(x) > 0; }
  const GeneratorDecl* find(const std::string& name) const;
  const GeneratorDecl& generator(const std::string& name) const;

 private:
  std::vector<ObjectId> objects_;
  std::vector<GeneratorDecl> generators_;
  std::unordered_map<std::string, size_t> by_name_;
  std::unordered_map<std::string, int> object_set_;
};

// ---------------------------------------------------------------------------
// terms of the free structure
// ---------------------------------------------------------------------------

class Term {
 public:
  enum class Tag { Gen, Id, Loosen, Cmp };

  static Term gen(std::string name);
  static Term id(ObjectId object);
  static Term loosen(Side side, Term body);
  static Term cmp(Term host, size_t pos, Term arg);

  Tag tag() const { return n_->tag; }
  const std::string& gen_name() const { return n_->name; }
  const ObjectId& id_object() const { return n_->name; }
  Side loosen_side() const { return n_->side; }
  Term body() const { return Term(n_->a); }
  Term host() const { return Term(n_->a); }
  Term arg() const { return Term(n_->b); }
  size_t pos() const { return n_->pos; }

  // number of constructors (Gen, Id, Loosen, Cmp)
  size_t size() const { return n_->size; }
  size_t gen_count() const { return n_->gens; }

  // stable identity of the shared node, for caches scoped to a live term
  const void* node_key() const { return n_.get(); }

  std::string encode() const;
  bool operator==(const Term& o) const { return n_ == o.n_ || encode() == o.encode(); }

 private:
  struct Node {
    Tag tag;
    std::string name;
    Side side = Side::Left;
    std::shared_ptr<const Node> a, b;
    size_t pos = 0;
    size_t size = 1;
    size_t gens = 0;
  };
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
  static void encode_into(const Node* n, std::string& out);
};

enum class FormLabel { A, B, C, D, E, F, G, H, I };

inline char form_name(FormLabel f) { return static_cast<char>('A' + static_cast<int>(f)); }

// arrow of a term; throws on any ill-formedness
Arrow infer(const Signature& sig, const Term& t);

// composition-form label per the host kind/arity and position
FormLabel form_of(const Arrow& host, size_t i, const Arrow& arg);

// checked constructors
Term compose(const Signature& sig, const Term& host, size_t pos, const Term& arg);
Term loosen(const Signature& sig, Side side, const Term& t);
Term identity(const Signature& sig, const ObjectId& x);

// identity at x wrapped in the loosenings that bring it to `kind`
// (for kLL the Left loosening is outermost)
Term loosened_identity(const Signature& sig, const ObjectId& x, Kind kind);

// true iff t is Id under a chain of loosenings
bool is_identity_chain(const Term& t);

std::string term_to_string(const Term& t);
Term parse_term(const std::string& text);

}  // namespace skewcat

#endif
