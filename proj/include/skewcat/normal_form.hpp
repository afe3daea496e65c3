#ifndef SKEWCAT_NORMAL_FORM_HPP
#define SKEWCAT_NORMAL_FORM_HPP

#include <memory>
#include <string>
#include <vector>

#include "skewcat/kernel.hpp"

namespace skewcat {

// Tree of generator occurrences obtained by flattening nested compositions.
// Leaves are Slot nodes carrying a domain object; nullary generators are
// childless internal nodes.
class GraftTree {
 public:
  static GraftTree slot(ObjectId object);
  static GraftTree node(std::string generator, std::vector<GraftTree> children);

  bool is_slot() const { return n_->is_slot; }
  const std::string& label() const { return n_->label; }  // generator name or slot object
  const std::vector<GraftTree>& children() const { return n_->children; }

  std::string encode() const;
  bool operator==(const GraftTree& o) const { return n_ == o.n_ || encode() == o.encode(); }

  // slot objects, left to right
  std::vector<ObjectId> slots() const;
  // replace the i-th slot (left-to-right) by the given subtree
  GraftTree graft(size_t slot_index, const GraftTree& sub) const;

 private:
  struct Node {
    bool is_slot = false;
    std::string label;
    std::vector<GraftTree> children;
  };
  explicit GraftTree(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
  static void encode_into(const Node* n, std::string& out);
  static bool graft_rec(const Node* n, size_t& remaining, const GraftTree& sub, GraftTree& out);
};

struct NormalForm {
  Kind kind;
  GraftTree tree;
  ObjectId codomain;

  bool operator==(const NormalForm& o) const {
    return kind == o.kind && codomain == o.codomain && tree == o.tree;
  }
  std::string encode() const { return std::string(kind.name()) + " " + tree.encode() + " : " + codomain; }
};

NormalForm normalize(const Signature& sig, const Term& t);

// tightness flags are only achievable when the corresponding spine consists
// of tight, non-nullary generators
bool feasible(const Signature& sig, const NormalForm& nf, std::string* why = nullptr);

// canonical witness term; normalize(realize(nf)) == nf
Term realize(const Signature& sig, const NormalForm& nf);

}  // namespace skewcat

#endif
