#ifndef SKEWCAT_MODEL_HPP
#define SKEWCAT_MODEL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "skewcat/kernel.hpp"
#include "skewcat/rewrite.hpp"

namespace skewcat {

// ---------------------------------------------------------------------------
// morphism values
// ---------------------------------------------------------------------------

// flat function table for matrix-family models; outputs are indices into the
// codomain cell, laid out lexicographically over (index tuple, input tuple)
struct FuncTable {
  std::vector<uint32_t> out;
  bool operator==(const FuncTable&) const = default;
  bool operator<(const FuncTable& o) const { return out < o.out; }
};

using MorphValue =
    std::variant<std::monostate, std::string, std::vector<std::string>, FuncTable>;

struct Morph {
  Arrow arrow;
  MorphValue value;
  bool operator==(const Morph&) const = default;
};

std::string morph_value_to_string(const MorphValue& v);
std::string morph_to_string(const Morph& m);

// ---------------------------------------------------------------------------
// model interfaces
// ---------------------------------------------------------------------------

class PlainModel {
 public:
  virtual ~PlainModel() = default;
  virtual std::string name() const = 0;
  virtual std::vector<ObjectId> objects() const = 0;
  // morphisms with the given input list and output; kind tag is kLL
  virtual std::vector<Morph> hom(const std::vector<ObjectId>& domain,
                                 const ObjectId& cod) const = 0;
  virtual Morph identity(const ObjectId& x) const = 0;
  virtual Morph compose(const Morph& g, size_t i, const Morph& f) const = 0;
  virtual size_t arity_bound() const { return 4; }
};

class LeftSkewModel {
 public:
  virtual ~LeftSkewModel() = default;
  virtual std::string name() const = 0;
  virtual std::vector<ObjectId> objects() const = 0;
  // tight morphisms carry kind kTL, loose ones kLL
  virtual std::vector<Morph> hom(bool tight, const std::vector<ObjectId>& domain,
                                 const ObjectId& cod) const = 0;
  virtual Morph loosen(const Morph& m) const = 0;
  virtual Morph identity(const ObjectId& x) const = 0;
  virtual Morph compose(const Morph& g, size_t i, const Morph& f) const = 0;
  virtual size_t arity_bound() const { return 4; }
};

class BiskewModel {
 public:
  virtual ~BiskewModel() = default;
  virtual std::string name() const = 0;
  virtual std::vector<ObjectId> objects() const = 0;
  virtual std::vector<Morph> hom(Kind kind, const std::vector<ObjectId>& domain,
                                 const ObjectId& cod) const = 0;
  virtual Morph loosen(Side side, const Morph& m) const = 0;
  virtual Morph identity(const ObjectId& x) const = 0;
  virtual Morph compose(const Morph& g, size_t i, const Morph& f) const = 0;
  virtual size_t arity_bound() const { return 4; }
};

// boundary-rule validation shared by all models; throws on violation
void require_composable(const Arrow& g, size_t i, const Arrow& f);
void require_loosenable(Side side, const Arrow& a);

// ---------------------------------------------------------------------------
// violations and the axiom checker
// ---------------------------------------------------------------------------

struct Violation {
  std::string law;
  std::string instance;
  std::string lhs;
  std::string rhs;
};

std::string violations_to_string(const std::vector<Violation>& vs);

struct CheckOptions {
  AxiomMode mode = AxiomMode::Uniform;
  size_t arity_bound = 0;     // 0: use the model's own bound
  size_t max_violations = 64;
  int jobs = 1;
};

// enumerate every law instance whose intermediates fit the arity bound
std::vector<Violation> check_axioms(const BiskewModel& m, const CheckOptions& opts = {});

// ---------------------------------------------------------------------------
// evaluation of free terms in a model
// ---------------------------------------------------------------------------

using Assignment = std::map<std::string, Morph>;

Morph eval_term(const BiskewModel& m, const Assignment& assignment, const Term& t);

// ---------------------------------------------------------------------------
// explicit tables
// ---------------------------------------------------------------------------

class TableModel : public BiskewModel {
 public:
  std::string label = "table";
  std::vector<ObjectId> objs;
  size_t bound = 4;
  // hom key "K|a,b|x" -> morphism names in enumeration order
  std::map<std::string, std::vector<std::string>> homs;
  std::map<std::string, Arrow> arrows;                 // name -> arrow
  std::map<ObjectId, std::string> ids;                 // object -> name
  std::map<std::string, std::string> loosen_tab;       // "L|name" / "R|name" -> name
  std::map<std::string, std::string> compose_tab;      // "g|i|f" -> name

  static std::string hom_key(Kind k, const std::vector<ObjectId>& domain, const ObjectId& cod);

  std::string name() const override { return label; }
  std::vector<ObjectId> objects() const override { return objs; }
  std::vector<Morph> hom(Kind kind, const std::vector<ObjectId>& domain,
                         const ObjectId& cod) const override;
  Morph loosen(Side side, const Morph& m) const override;
  Morph identity(const ObjectId& x) const override;
  Morph compose(const Morph& g, size_t i, const Morph& f) const override;
  size_t arity_bound() const override { return bound; }

  Morph named(const std::string& n) const;
};

// freeze a model into explicit tables up to the arity bound
TableModel materialize(const BiskewModel& m, size_t arity_bound);

struct Mutation {
  std::string description;
  std::shared_ptr<TableModel> model;
};

// single-entry mutations of composition/identity/loosening tables, drawn
// with a deterministic generator; each replaces one output by a different
// element of the same hom-set
std::vector<Mutation> sample_mutations(const TableModel& m, int count, uint64_t seed);

}  // namespace skewcat

#endif
