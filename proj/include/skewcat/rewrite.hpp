#ifndef SKEWCAT_REWRITE_HPP
#define SKEWCAT_REWRITE_HPP

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "skewcat/normal_form.hpp"

namespace skewcat {

// Uniform: every well-formed schema instance of the laws.
// PaperStrict: only the composition-form pairs in the published lists
// (the loosening-commutation and associativity lists are shorter there).
enum class AxiomMode { Uniform, PaperStrict };

struct Rewrite {
  std::string law;
  Term term;
};

struct LawOptions {
  AxiomMode mode = AxiomMode::Uniform;
  // identity expansion grows terms at every position; connectivity searches
  // over identity-free terms switch it off
  bool identity_expansion = true;
};

// all one-step rewrites of t, both directions, at every subterm
std::vector<Rewrite> law_instances(const Signature& sig, const Term& t, AxiomMode mode);
std::vector<Rewrite> law_instances(const Signature& sig, const Term& t, const LawOptions& opts);

enum class OracleVerdict { Equal, Distinct, Unknown };

inline const char* verdict_name(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Equal: return "EQUAL";
    case OracleVerdict::Distinct: return "DISTINCT";
    default: return "UNKNOWN";
  }
}

struct OracleOptions {
  AxiomMode mode = AxiomMode::Uniform;
  int step_bound = 64;
  // default: max(size(t), size(s)) + 4
  std::optional<size_t> size_bound;
  size_t guard = 4'000'000;
};

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::Unknown;
  size_t explored = 0;
  int rounds = 0;
  bool saturated = false;
};

// breadth-first closure of {t} under the laws, capped by size and rounds;
// Equal if s is reached, Distinct once the capped closure saturates
OracleResult oracle_equal(const Signature& sig, const Term& t, const Term& s,
                          const OracleOptions& opts = {});

// full closure from a set of seeds (used by the acceptance harness)
struct Closure {
  std::unordered_set<std::string> visited;  // term encodings
  bool saturated = false;
  int rounds = 0;
};
Closure rewrite_closure(const Signature& sig, const std::vector<Term>& seeds,
                        const LawOptions& laws, int step_bound, size_t size_bound, size_t guard,
                        const std::function<void(const Term&)>& on_visit = {});

struct EnumerateOptions {
  size_t guard = 1'000'000;
  bool empty_on_zero = false;
};

// every well-formed term with at most the given number of generator
// occurrences, where identities appear only as bare loosening chains
// (composing an identity never changes the normal form, so those variants
// are unbounded and excluded); covers all loosening/bracketing variants
std::vector<Term> enumerate_terms(const Signature& sig, int max_generator_occurrences,
                                  const EnumerateOptions& opts = {});

}  // namespace skewcat

#endif
