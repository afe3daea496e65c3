#include "doctest.h"
#include "fixtures.hpp"
#include "skewcat/kernel.hpp"
#include "skewcat/rewrite.hpp"

#include <map>
#include <optional>
#include <set>

using namespace skewcat;
using skewcat::tests::me_signature;
using skewcat::tests::mue_signature;

namespace {

// Independent transliteration of the nine composition-form rows, used as the
// oracle for the exhaustive classification check.  Each row states its own
// side conditions on the host kind, host arity, position and argument kind.
std::optional<FormLabel> table_row_match(Kind g, size_t n, size_t i, Kind f) {
  std::optional<FormLabel> hit;
  auto claim = [&](FormLabel l) {
    REQUIRE_MESSAGE(!hit.has_value(), "two rows match the same instance");
    hit = l;
  };
  bool first = i == 0, last = i + 1 == n;
  if (g == kLL && f == kLL) claim(FormLabel::A);
  if (g == kTL && !first && f == kLL) claim(FormLabel::B);
  if (g == kLT && !last && f == kLL) claim(FormLabel::C);
  if (g == kTT && !first && !last && f == kLL) claim(FormLabel::D);
  if (g == kTL && first && f == kTL) claim(FormLabel::E);
  if (g == kTT && n >= 2 && first && f == kTL) claim(FormLabel::F);
  if (g == kLT && last && f == kLT) claim(FormLabel::G);
  if (g == kTT && n >= 2 && last && f == kLT) claim(FormLabel::H);
  if (g == kTT && n == 1 && f == kTT) claim(FormLabel::I);
  return hit;
}

}  // namespace

TEST_CASE("exhaustive classification: boundary rule accepts exactly the nine forms") {
  std::set<FormLabel> labels_seen;
  std::map<FormLabel, std::set<std::string>> schema_of_label;
  for (Kind g : kAllKinds) {
    for (size_t n = 0; n <= 3; ++n) {
      if ((g.left_tight || g.right_tight) && n == 0) continue;
      for (size_t i = 0; i < n; ++i) {
        for (Kind f : kAllKinds) {
          for (size_t fa = 0; fa <= 3; ++fa) {
            if ((f.left_tight || f.right_tight) && fa == 0) continue;
            std::optional<FormLabel> row = table_row_match(g, n, i, f);
            Arrow ga{g, std::vector<ObjectId>(n, "x"), "x"};
            Arrow fan{f, std::vector<ObjectId>(fa, "x"), "x"};
            bool ok = forced_argument_kind(g, n, i) == f;
            REQUIRE_MESSAGE(ok == row.has_value(), "boundary rule and row table disagree at g="
                                                       << g.name() << " n=" << n << " i=" << i
                                                       << " f=" << f.name());
            if (ok) {
              FormLabel l = form_of(ga, i, fan);
              REQUIRE(row.has_value());
              CHECK(l == *row);
              labels_seen.insert(l);
              // schema = (host kind, position class, argument kind); each
              // label must correspond to exactly one schema
              std::string schema = std::string(g.name()) + "/" +
                                   (i == 0 ? (i + 1 == n ? "both" : "first") : (i + 1 == n ? "last" : "mid")) +
                                   "/" + f.name();
              schema_of_label[l].insert(schema);
            } else {
              CHECK_THROWS_AS((void)form_of(ga, i, fan), SkewError);
            }
          }
        }
      }
    }
  }
  CHECK(labels_seen.size() == 9);
  // A spans all position classes of a loose-loose host; every other label is
  // a single schema up to the first/both collapse at unary hosts.
  for (auto& [l, schemas] : schema_of_label) {
    std::set<std::string> reduced;
    for (const std::string& s : schemas) {
      std::string r = s;
      if (l == FormLabel::A) r = "LL/any/LL";
      if (l == FormLabel::E) r = "TL/first/TL";
      if (l == FormLabel::G) r = "LT/last/LT";
      if (l == FormLabel::B) r = "TL/nonfirst/LL";
      if (l == FormLabel::C) r = "LT/nonlast/LL";
      reduced.insert(r);
    }
    CHECK_MESSAGE(reduced.size() == 1, "label " << form_name(l) << " covers several schemas");
  }
}

TEST_CASE("infer on the worked examples") {
  Signature sig = me_signature();
  Term m = Term::gen("m");
  Term e = Term::gen("e");

  CHECK(infer(sig, Term::id("x")) == Arrow{kTT, {"x"}, "x"});

  // right-unit shape: m with the unit in its second slot is tight-loose
  Term ru = Term::cmp(Term::loosen(Side::Right, m), 1, e);
  CHECK(infer(sig, ru) == Arrow{kTL, {"x"}, "x"});

  // unit cannot enter the tight first slot
  CHECK_THROWS_WITH_AS((void)infer(sig, Term::cmp(m, 0, e)),
                       doctest::Contains("BoundaryKindMismatch"), SkewError);

  CHECK(infer(sig, Term::cmp(Term::id("x"), 0, m)) == Arrow{kTT, {"x", "x"}, "x"});
  Term assoc_l = Term::cmp(m, 0, Term::loosen(Side::Right, m));
  Term assoc_r = Term::cmp(m, 1, Term::loosen(Side::Left, m));
  CHECK(infer(sig, assoc_l) == Arrow{kTT, {"x", "x", "x"}, "x"});
  CHECK(infer(sig, assoc_r) == Arrow{kTT, {"x", "x", "x"}, "x"});

  CHECK(form_of(infer(sig, m), 0, infer(sig, Term::loosen(Side::Right, m))) == FormLabel::F);
  CHECK(form_of(infer(sig, m), 1, infer(sig, Term::loosen(Side::Left, m))) == FormLabel::H);
  CHECK(form_of(infer(sig, Term::id("x")), 0, infer(sig, m)) == FormLabel::I);
}

TEST_CASE("loosen and identity") {
  Signature sig = me_signature();
  Term m = Term::gen("m");
  Term e = Term::gen("e");

  Term both = loosen(sig, Side::Left, loosen(sig, Side::Right, m));
  CHECK(infer(sig, both) == Arrow{kLL, {"x", "x"}, "x"});
  CHECK(infer(sig, loosen(sig, Side::Left, identity(sig, "x"))) == Arrow{kLT, {"x"}, "x"});
  CHECK_THROWS_WITH_AS((void)loosen(sig, Side::Left, e), doctest::Contains("LoosenOnLooseSide"),
                       SkewError);
  CHECK_THROWS_AS((void)identity(sig, "nope"), SkewError);
  CHECK_THROWS_AS((void)infer(sig, Term::gen("nope")), SkewError);
  CHECK_THROWS_AS((void)infer(sig, Term::cmp(Term::gen("m"), 7, e)), SkewError);
}

TEST_CASE("kind preservation, domain splice, tight non-emptiness") {
  Signature sig = mue_signature();
  for (const Term& t : enumerate_terms(sig, 3)) {
    Arrow a = infer(sig, t);
    if (t.tag() == Term::Tag::Cmp) {
      Arrow g = infer(sig, t.host());
      Arrow f = infer(sig, t.arg());
      CHECK(a.kind == g.kind);
      CHECK(a.domain.size() == g.domain.size() + f.domain.size() - 1);
    }
    if (a.kind.left_tight || a.kind.right_tight) CHECK(!a.domain.empty());
  }
}

TEST_CASE("term parsing and printing round-trip") {
  Signature sig = me_signature();
  Term t = parse_term("cmp(lloR(m), 1, e)");
  CHECK(infer(sig, t) == Arrow{kTL, {"x"}, "x"});
  CHECK(term_to_string(t) == "cmp(lloR(m), 1, e)");
  CHECK(parse_term(term_to_string(t)) == t);
  CHECK(parse_term("id(x)") == Term::id("x"));
  CHECK_THROWS_AS((void)parse_term("cmp(m, , e)"), SkewError);
  CHECK_THROWS_AS((void)parse_term("lloL("), SkewError);
}
