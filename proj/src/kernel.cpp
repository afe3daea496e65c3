#include "skewcat/kernel.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace skewcat {

const char* err_name(ErrCode c) {
  switch (c) {
    case ErrCode::UnknownGenerator: return "UnknownGenerator";
    case ErrCode::UnknownObject: return "UnknownObject";
    case ErrCode::DuplicateName: return "DuplicateName";
    case ErrCode::LoosenOnLooseSide: return "LoosenOnLooseSide";
    case ErrCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrCode::ObjectMismatch: return "ObjectMismatch";
    case ErrCode::BoundaryKindMismatch: return "BoundaryKindMismatch";
    case ErrCode::NotAForm: return "NotAForm";
    case ErrCode::InfeasibleNormalForm: return "InfeasibleNormalForm";
    case ErrCode::ArrowMismatch: return "ArrowMismatch";
    case ErrCode::CardinalityGuard: return "CardinalityGuard";
    case ErrCode::ArityBoundExceeded: return "ArityBoundExceeded";
    case ErrCode::AssignmentMismatch: return "AssignmentMismatch";
    case ErrCode::HomMembership: return "HomMembership";
    case ErrCode::ReferenceError: return "ReferenceError";
    case ErrCode::TypeMismatch: return "TypeMismatch";
    case ErrCode::SyntaxError: return "SyntaxError";
    case ErrCode::TypeError: return "TypeError";
    case ErrCode::InterpretationGap: return "InterpretationGap";
    case ErrCode::BadInput: return "BadInput";
    case ErrCode::Internal: return "Internal";
  }
  return "Unknown";
}

Kind Kind::parse(const std::string& s) {
  if (s == "LL") return kLL;
  if (s == "TL") return kTL;
  if (s == "LT") return kLT;
  if (s == "TT") return kTT;
  fail(ErrCode::BadInput, "unknown kind '" + s + "'");
}

std::string Arrow::encode() const {
  std::string out = kind.name();
  out += '[';
  for (size_t i = 0; i < domain.size(); ++i) {
    if (i) out += ',';
    out += domain[i];
  }
  out += "]->";
  out += codomain;
  return out;
}

Signature::Signature(std::vector<ObjectId> objects, std::vector<GeneratorDecl> generators)
    : objects_(std::move(objects)), generators_(std::move(generators)) {
  for (const auto& x : objects_) {
    if (!object_set_.emplace(x, 1).second)
      fail(ErrCode::DuplicateName, "object '" + x + "' declared twice");
  }
  for (size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (!by_name_.emplace(g.name, i).second)
      fail(ErrCode::DuplicateName, "generator '" + g.name + "' declared twice");
    if (!has_object(g.arrow.codomain))
      fail(ErrCode::UnknownObject, "codomain of '" + g.name + "'");
    for (const auto& d : g.arrow.domain)
      if (!has_object(d)) fail(ErrCode::UnknownObject, "domain of '" + g.name + "'");
    if ((g.arrow.kind.left_tight || g.arrow.kind.right_tight) && g.arrow.domain.empty())
      fail(ErrCode::BadInput, "tight generator '" + g.name + "' with empty domain");
  }
}

const GeneratorDecl* Signature::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &generators_[it->second];
}

const GeneratorDecl& Signature::generator(const std::string& name) const {
  const GeneratorDecl* g = find(name);
  if (!g) fail(ErrCode::UnknownGenerator, "'" + name + "'");
  return *g;
}

// ---------------------------------------------------------------------------
// terms
// ---------------------------------------------------------------------------

Term Term::gen(std::string name) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Gen;
  n->name = std::move(name);
  n->size = 1;
  n->gens = 1;
  return Term(std::move(n));
}

Term Term::id(ObjectId object) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Id;
  n->name = std::move(object);
  n->size = 1;
  return Term(std::move(n));
}

Term Term::loosen(Side side, Term body) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Loosen;
  n->side = side;
  n->a = body.n_;
  n->size = 1 + body.size();
  n->gens = body.gen_count();
  return Term(std::move(n));
}

Term Term::cmp(Term host, size_t pos, Term arg) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Cmp;
  n->a = host.n_;
  n->b = arg.n_;
  n->pos = pos;
  n->size = 1 + host.size() + arg.size();
  n->gens = host.gen_count() + arg.gen_count();
  return Term(std::move(n));
}

void Term::encode_into(const Node* n, std::string& out) {
  switch (n->tag) {
    case Tag::Gen:
      out += 'g';
      out += n->name;
      break;
    case Tag::Id:
      out += 'i';
      out += n->name;
      break;
    case Tag::Loosen:
      out += n->side == Side::Left ? "L(" : "R(";
      encode_into(n->a.get(), out);
      out += ')';
      break;
    case Tag::Cmp:
      out += "c(";
      encode_into(n->a.get(), out);
      out += '|';
      out += std::to_string(n->pos);
      out += '|';
      encode_into(n->b.get(), out);
      out += ')';
      break;
  }
}

std::string Term::encode() const {
  std::string out;
  out.reserve(n_->size * 6);
  encode_into(n_.get(), out);
  return out;
}

// ---------------------------------------------------------------------------
// inference
// ---------------------------------------------------------------------------

Arrow infer(const Signature& sig, const Term& t) {
  switch (t.tag()) {
    case Term::Tag::Gen:
      return sig.generator(t.gen_name()).arrow;
    case Term::Tag::Id: {
      const ObjectId& x = t.id_object();
      if (!sig.has_object(x)) fail(ErrCode::UnknownObject, "'" + x + "'");
      return Arrow{kTT, {x}, x};
    }
    case Term::Tag::Loosen: {
      Arrow a = infer(sig, t.body());
      Side s = t.loosen_side();
      if (!a.kind.tight(s))
        fail(ErrCode::LoosenOnLooseSide,
             std::string(side_name(s)) + " side of " + a.encode() + " is already loose");
      if (s == Side::Left)
        a.kind.left_tight = false;
      else
        a.kind.right_tight = false;
      return a;
    }
    case Term::Tag::Cmp: {
      Arrow g = infer(sig, t.host());
      Arrow f = infer(sig, t.arg());
      size_t i = t.pos();
      if (i >= g.domain.size())
        fail(ErrCode::IndexOutOfRange,
             "position " + std::to_string(i) + " in " + g.encode());
      if (f.codomain != g.domain[i])
        fail(ErrCode::ObjectMismatch,
             "slot " + std::to_string(i) + " of " + g.encode() + " expects " + g.domain[i] +
                 ", argument has codomain " + f.codomain);
      Kind need = forced_argument_kind(g.kind, g.domain.size(), i);
      if (f.kind != need)
        fail(ErrCode::BoundaryKindMismatch,
             "slot " + std::to_string(i) + " of " + g.encode() + " needs kind " + need.name() +
                 ", argument is " + f.kind.name());
      Arrow out;
      out.kind = g.kind;
      out.codomain = g.codomain;
      out.domain.reserve(g.domain.size() + f.domain.size() - 1);
      out.domain.insert(out.domain.end(), g.domain.begin(), g.domain.begin() + i);
      out.domain.insert(out.domain.end(), f.domain.begin(), f.domain.end());
      out.domain.insert(out.domain.end(), g.domain.begin() + i + 1, g.domain.end());
      return out;
    }
  }
  fail(ErrCode::Internal, "unreachable");
}

FormLabel form_of(const Arrow& host, size_t i, const Arrow& arg) {
  size_t n = host.domain.size();
  if (i >= n) fail(ErrCode::NotAForm, "position out of range");
  if (arg.codomain != host.domain[i]) fail(ErrCode::NotAForm, "object mismatch");
  if (arg.kind != forced_argument_kind(host.kind, n, i))
    fail(ErrCode::NotAForm, "argument kind violates the boundary rule");
  bool first = i == 0;
  bool last = i + 1 == n;
  if (host.kind == kLL) return FormLabel::A;
  if (host.kind == kTL) return first ? FormLabel::E : FormLabel::B;
  if (host.kind == kLT) return last ? FormLabel::G : FormLabel::C;
  // host TT
  if (n == 1) return FormLabel::I;
  if (first) return FormLabel::F;
  if (last) return FormLabel::H;
  return FormLabel::D;
}

Term compose(const Signature& sig, const Term& host, size_t pos, const Term& arg) {
  Term t = Term::cmp(host, pos, arg);
  infer(sig, t);
  return t;
}

Term loosen(const Signature& sig, Side side, const Term& t) {
  Term out = Term::loosen(side, t);
  infer(sig, out);
  return out;
}

Term identity(const Signature& sig, const ObjectId& x) {
  if (!sig.has_object(x)) fail(ErrCode::UnknownObject, "'" + x + "'");
  return Term::id(x);
}

Term loosened_identity(const Signature& sig, const ObjectId& x, Kind kind) {
  Term t = identity(sig, x);
  if (!kind.right_tight) t = Term::loosen(Side::Right, t);
  if (!kind.left_tight) t = Term::loosen(Side::Left, t);
  return t;
}

bool is_identity_chain(const Term& t) {
  Term cur = t;
  while (cur.tag() == Term::Tag::Loosen) cur = cur.body();
  return cur.tag() == Term::Tag::Id;
}

// ---------------------------------------------------------------------------
// concrete syntax:  id(x), lloL(t), lloR(t), cmp(g, i, f), generator names
// ---------------------------------------------------------------------------

std::string term_to_string(const Term& t) {
  switch (t.tag()) {
    case Term::Tag::Gen:
      return t.gen_name();
    case Term::Tag::Id:
      return "id(" + t.id_object() + ")";
    case Term::Tag::Loosen:
      return (t.loosen_side() == Side::Left ? "lloL(" : "lloR(") + term_to_string(t.body()) + ")";
    case Term::Tag::Cmp:
      return "cmp(" + term_to_string(t.host()) + ", " + std::to_string(t.pos()) + ", " +
             term_to_string(t.arg()) + ")";
  }
  fail(ErrCode::Internal, "unreachable");
}

namespace {

struct TermParser {
  const std::string& s;
  size_t p = 0;

  [[noreturn]] void err(const std::string& msg) const {
    fail(ErrCode::SyntaxError, msg + " at offset " + std::to_string(p));
  }
  void ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eat(char c) {
    ws();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) err(std::string("expected '") + c + "'");
  }
  std::string ident() {
    ws();
    size_t start = p;
    while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_' ||
                            s[p] == '\'' || s[p] == '*'))
      ++p;
    if (start == p) err("expected identifier");
    return s.substr(start, p - start);
  }
  size_t number() {
    ws();
    size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (start == p) err("expected position index");
    return static_cast<size_t>(std::stoul(s.substr(start, p - start)));
  }

  Term term() {
    std::string head = ident();
    if (head == "id") {
      expect('(');
      std::string obj = ident();
      expect(')');
      return Term::id(obj);
    }
    if (head == "lloL" || head == "lloR") {
      expect('(');
      Term body = term();
      expect(')');
      return Term::loosen(head == "lloL" ? Side::Left : Side::Right, body);
    }
    if (head == "cmp") {
      expect('(');
      Term g = term();
      expect(',');
      size_t i = number();
      expect(',');
      Term f = term();
      expect(')');
      return Term::cmp(g, i, f);
    }
    return Term::gen(head);
  }
};

}  // namespace

Term parse_term(const std::string& text) {
  TermParser parser{text};
  Term t = parser.term();
  parser.ws();
  if (parser.p != text.size()) parser.err("trailing input");
  return t;
}

}  // namespace skewcat
