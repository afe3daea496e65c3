#include "skewcat/normal_form.hpp"

namespace skewcat {

GraftTree GraftTree::slot(ObjectId object) {
  auto n = std::make_shared<Node>();
  n->is_slot = true;
  n->label = std::move(object);
  return GraftTree(std::move(n));
}

GraftTree GraftTree::node(std::string generator, std::vector<GraftTree> children) {
  auto n = std::make_shared<Node>();
  n->label = std::move(generator);
  n->children = std::move(children);
  return GraftTree(std::move(n));
}

void GraftTree::encode_into(const Node* n, std::string& out) {
  if (n->is_slot) {
    out += '_';
    out += n->label;
    return;
  }
  out += n->label;
  out += '(';
  for (size_t i = 0; i < n->children.size(); ++i) {
    if (i) out += ',';
    encode_into(n->children[i].n_.get(), out);
  }
  out += ')';
}

std::string GraftTree::encode() const {
  std::string out;
  encode_into(n_.get(), out);
  return out;
}

std::vector<ObjectId> GraftTree::slots() const {
  std::vector<ObjectId> out;
  std::vector<const Node*> stack{n_.get()};
  // preorder with explicit stack; children pushed in reverse for l-to-r order
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->is_slot) {
      out.push_back(n->label);
      continue;
    }
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it)
      stack.push_back(it->n_.get());
  }
  return out;
}

bool GraftTree::graft_rec(const Node* n, size_t& remaining, const GraftTree& sub, GraftTree& out) {
  if (n->is_slot) {
    if (remaining == 0) {
      out = sub;
      return true;
    }
    --remaining;
    out = GraftTree::slot(n->label);
    return false;
  }
  std::vector<GraftTree> kids;
  kids.reserve(n->children.size());
  bool replaced = false;
  for (const GraftTree& c : n->children) {
    if (replaced) {
      kids.push_back(c);
      continue;
    }
    GraftTree nc = c;
    replaced = graft_rec(c.n_.get(), remaining, sub, nc);
    kids.push_back(nc);
  }
  out = GraftTree::node(n->label, std::move(kids));
  return replaced;
}

GraftTree GraftTree::graft(size_t slot_index, const GraftTree& sub) const {
  size_t remaining = slot_index;
  GraftTree out = *this;
  if (!graft_rec(n_.get(), remaining, sub, out))
    fail(ErrCode::IndexOutOfRange, "graft slot " + std::to_string(slot_index));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

GraftTree tree_of(const Signature& sig, const Term& t) {
  switch (t.tag()) {
    case Term::Tag::Gen: {
      const GeneratorDecl& g = sig.generator(t.gen_name());
      std::vector<GraftTree> kids;
      kids.reserve(g.arrow.domain.size());
      for (const auto& d : g.arrow.domain) kids.push_back(GraftTree::slot(d));
      return GraftTree::node(g.name, std::move(kids));
    }
    case Term::Tag::Id:
      return GraftTree::slot(t.id_object());
    case Term::Tag::Loosen:
      return tree_of(sig, t.body());
    case Term::Tag::Cmp:
      return tree_of(sig, t.host()).graft(t.pos(), tree_of(sig, t.arg()));
  }
  fail(ErrCode::Internal, "unreachable");
}

// walk the iterated first/last-child path; every generator on it must be
// tight on that side and non-nullary
bool spine_ok(const Signature& sig, const GraftTree& tree, Side side, std::string* why) {
  GraftTree cur = tree;
  while (!cur.is_slot()) {
    const GeneratorDecl& g = sig.generator(cur.label());
    if (!g.arrow.kind.tight(side)) {
      if (why) *why = "generator '" + g.name + "' on the " + side_name(side) + " spine is loose";
      return false;
    }
    if (cur.children().empty()) {
      if (why) *why = "nullary generator '" + g.name + "' on the " + side_name(side) + " spine";
      return false;
    }
    cur = side == Side::Left ? cur.children().front() : cur.children().back();
  }
  return true;
}

}  // namespace

NormalForm normalize(const Signature& sig, const Term& t) {
  Arrow a = infer(sig, t);
  NormalForm nf{a.kind, tree_of(sig, t), a.codomain};
  std::string why;
  if (!feasible(sig, nf, &why)) fail(ErrCode::Internal, "normalize produced infeasible form: " + why);
  return nf;
}

bool feasible(const Signature& sig, const NormalForm& nf, std::string* why) {
  if (nf.kind.left_tight && !spine_ok(sig, nf.tree, Side::Left, why)) return false;
  if (nf.kind.right_tight && !spine_ok(sig, nf.tree, Side::Right, why)) return false;
  return true;
}

namespace {

// verify every node exists in the signature and children match arities and
// slot objects line up
void validate_tree(const Signature& sig, const GraftTree& tree, const ObjectId& expect_cod) {
  if (tree.is_slot()) {
    if (!sig.has_object(tree.label())) fail(ErrCode::UnknownObject, "slot '" + tree.label() + "'");
    if (tree.label() != expect_cod)
      fail(ErrCode::ObjectMismatch, "slot '" + tree.label() + "' where '" + expect_cod + "' expected");
    return;
  }
  const GeneratorDecl& g = sig.generator(tree.label());
  if (g.arrow.codomain != expect_cod)
    fail(ErrCode::ObjectMismatch,
         "node '" + g.name + "' has codomain " + g.arrow.codomain + ", expected " + expect_cod);
  if (g.arrow.domain.size() != tree.children().size())
    fail(ErrCode::BadInput, "node '" + g.name + "' has wrong child count");
  for (size_t i = 0; i < tree.children().size(); ++i)
    validate_tree(sig, tree.children()[i], g.arrow.domain[i]);
}

Term realize_tree(const Signature& sig, const GraftTree& tree, Kind want) {
  if (tree.is_slot()) return loosened_identity(sig, tree.label(), want);
  const GeneratorDecl& g = sig.generator(tree.label());
  Kind have = g.arrow.kind;
  if ((want.left_tight && !have.left_tight) || (want.right_tight && !have.right_tight))
    fail(ErrCode::InfeasibleNormalForm, "node '" + g.name + "' cannot be " + want.name());
  Term t = Term::gen(g.name);
  if (have.right_tight && !want.right_tight) t = Term::loosen(Side::Right, t);
  if (have.left_tight && !want.left_tight) t = Term::loosen(Side::Left, t);
  size_t n = tree.children().size();
  for (size_t k = n; k-- > 0;) {
    const GraftTree& child = tree.children()[k];
    if (child.is_slot()) continue;
    Kind child_kind = forced_argument_kind(want, n, k);
    t = Term::cmp(t, k, realize_tree(sig, child, child_kind));
  }
  return t;
}

}  // namespace

Term realize(const Signature& sig, const NormalForm& nf) {
  std::string why;
  if (!feasible(sig, nf, &why)) fail(ErrCode::InfeasibleNormalForm, why);
  validate_tree(sig, nf.tree, nf.codomain);
  Term t = realize_tree(sig, nf.tree, nf.kind);
  NormalForm back = normalize(sig, t);
  if (!(back == nf)) fail(ErrCode::Internal, "realize is not a section at " + nf.encode());
  return t;
}

}  // namespace skewcat
