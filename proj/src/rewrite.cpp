#include "skewcat/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace skewcat {

namespace {

// composition-form pairs appearing in the published law lists
bool strict_left_commute(FormLabel x) {
  return x == FormLabel::B || x == FormLabel::D || x == FormLabel::E || x == FormLabel::F ||
         x == FormLabel::I;
}
bool strict_right_commute(FormLabel x) {
  return x == FormLabel::C || x == FormLabel::D || x == FormLabel::F || x == FormLabel::H ||
         x == FormLabel::I;
}
bool strict_assoc(FormLabel outer, FormLabel inner) {
  switch (outer) {
    case FormLabel::E: return inner == FormLabel::E;
    case FormLabel::G: return inner == FormLabel::G;
    case FormLabel::F: return inner == FormLabel::E;
    case FormLabel::H: return inner == FormLabel::G;
    case FormLabel::I:
      return inner == FormLabel::F || inner == FormLabel::H || inner == FormLabel::I;
    default: return false;
  }
}
// the published interchange list is complete, so it imposes no restriction
bool strict_interchange(FormLabel, FormLabel) { return true; }

struct Rewriter {
  const Signature& sig;
  AxiomMode mode;
  bool identity_expansion;
  std::vector<Rewrite>& out;
  // arrows of subterms of the one term being rewritten; nodes stay alive
  // for the duration of the call, so pointer keys are stable
  std::unordered_map<const void*, Arrow> cache;

  const Arrow& arrow(const Term& t) {
    auto it = cache.find(t.node_key());
    if (it != cache.end()) return it->second;
    Arrow a = [&] {
      switch (t.tag()) {
        case Term::Tag::Gen:
          return sig.generator(t.gen_name()).arrow;
        case Term::Tag::Id:
          return Arrow{kTT, {t.id_object()}, t.id_object()};
        case Term::Tag::Loosen: {
          Arrow b = arrow(t.body());
          if (t.loosen_side() == Side::Left)
            b.kind.left_tight = false;
          else
            b.kind.right_tight = false;
          return b;
        }
        case Term::Tag::Cmp: {
          Arrow g = arrow(t.host());
          Arrow f = arrow(t.arg());
          Arrow o;
          o.kind = g.kind;
          o.codomain = g.codomain;
          size_t i = t.pos();
          o.domain.reserve(g.domain.size() + f.domain.size() - 1);
          o.domain.insert(o.domain.end(), g.domain.begin(), g.domain.begin() + i);
          o.domain.insert(o.domain.end(), f.domain.begin(), f.domain.end());
          o.domain.insert(o.domain.end(), g.domain.begin() + i + 1, g.domain.end());
          return o;
        }
      }
      fail(ErrCode::Internal, "unreachable");
    }();
    return cache.emplace(t.node_key(), std::move(a)).first->second;
  }

  void emit(const std::string& law, Term rewritten,
            const std::function<Term(const Term&)>& rebuild) {
    out.push_back({law, rebuild(rewritten)});
  }

  std::vector<Term> identity_chains(const ObjectId& x, Kind kind) const {
    Term base = Term::id(x);
    if (kind == kTT) return {base};
    if (kind == kTL) return {Term::loosen(Side::Right, base)};
    if (kind == kLT) return {Term::loosen(Side::Left, base)};
    return {Term::loosen(Side::Left, Term::loosen(Side::Right, base)),
            Term::loosen(Side::Right, Term::loosen(Side::Left, base))};
  }

  void at_root(const Term& u, const std::function<Term(const Term&)>& rebuild) {
    // loosen-swap
    if (u.tag() == Term::Tag::Loosen && u.body().tag() == Term::Tag::Loosen &&
        u.loosen_side() != u.body().loosen_side()) {
      Term x = u.body().body();
      emit("loosen-swap",
           Term::loosen(u.body().loosen_side(), Term::loosen(u.loosen_side(), x)), rebuild);
    }

    // loosening commutes with composition, forward direction
    if (u.tag() == Term::Tag::Loosen && u.body().tag() == Term::Tag::Cmp) {
      Side s = u.loosen_side();
      Term g = u.body().host();
      Term f = u.body().arg();
      size_t i = u.body().pos();
      Arrow ga = arrow(g);
      bool boundary = s == Side::Left ? i == 0 : i + 1 == ga.arity();
      bool allowed = mode == AxiomMode::Uniform;
      if (!allowed) {
        Arrow fa = arrow(f);
        FormLabel x = form_of(ga, i, fa);
        allowed = s == Side::Left ? strict_left_commute(x) : strict_right_commute(x);
      }
      if (allowed) {
        Term nf = boundary ? Term::loosen(s, f) : f;
        emit(s == Side::Left ? "lloL-commute" : "lloR-commute",
             Term::cmp(Term::loosen(s, g), i, nf), rebuild);
      }
    }

    if (u.tag() == Term::Tag::Cmp) {
      Term h = u.host();
      Term f = u.arg();
      size_t i = u.pos();
      Arrow ha = arrow(h);

      // loosening commutes with composition, backward direction
      if (h.tag() == Term::Tag::Loosen) {
        Side s = h.loosen_side();
        Term g = h.body();
        Arrow ga = arrow(g);
        bool boundary = s == Side::Left ? i == 0 : i + 1 == ga.arity();
        Term inner_arg = f;
        bool ok = true;
        if (boundary) {
          if (f.tag() == Term::Tag::Loosen && f.loosen_side() == s)
            inner_arg = f.body();
          else
            ok = false;
        }
        if (ok) {
          bool allowed = mode == AxiomMode::Uniform;
          if (!allowed) {
            Arrow ia = arrow(inner_arg);
            FormLabel x = form_of(ga, i, ia);
            allowed = s == Side::Left ? strict_left_commute(x) : strict_right_commute(x);
          }
          if (allowed)
            emit(s == Side::Left ? "lloL-commute" : "lloR-commute",
                 Term::loosen(s, Term::cmp(g, i, inner_arg)), rebuild);
        }
      }

      // identity contraction
      if (i == 0 && ha.arity() == 1 && is_identity_chain(h)) emit("left-identity", f, rebuild);
      if (is_identity_chain(f)) emit("right-identity", h, rebuild);

      // associativity, forward: h o (g o f)  ->  (h o g) o f
      if (f.tag() == Term::Tag::Cmp) {
        Term g = f.host();
        Term ff = f.arg();
        size_t j = f.pos();
        bool allowed = mode == AxiomMode::Uniform;
        if (!allowed) {
          Arrow ga = arrow(g);
          Arrow ffa = arrow(ff);
          allowed = strict_assoc(form_of(ha, i, ga), form_of(ga, j, ffa));
        }
        if (allowed)
          emit("assoc", Term::cmp(Term::cmp(h, i, g), i + j, ff), rebuild);
      }

      // associativity backward and interchange share the nested-host pattern
      if (h.tag() == Term::Tag::Cmp) {
        Term hh = h.host();
        Term w = h.arg();
        size_t p = h.pos();
        Arrow wa = arrow(w);
        size_t wn = wa.arity();
        if (i >= p && i < p + wn) {
          // (hh o_p w) o_i f  ->  hh o_p (w o_{i-p} f)
          size_t j = i - p;
          bool allowed = mode == AxiomMode::Uniform;
          if (!allowed) {
            Arrow hha = arrow(hh);
            Arrow fa = arrow(f);
            allowed = strict_assoc(form_of(hha, p, wa), form_of(wa, j, fa));
          }
          if (allowed)
            emit("assoc", Term::cmp(hh, p, Term::cmp(w, j, f)), rebuild);
        } else if (i < p) {
          // disjoint slots: lower position composed second -> swap the order
          Arrow fa = arrow(f);
          Arrow hha = arrow(hh);
          bool allowed = mode == AxiomMode::Uniform ||
                         strict_interchange(form_of(hha, i, fa), form_of(hha, p, wa));
          if (allowed)
            emit("interchange",
                 Term::cmp(Term::cmp(hh, i, f), p + fa.arity() - 1, w), rebuild);
        } else {  // i >= p + wn
          size_t j = i - wn + 1;
          Arrow fa = arrow(f);
          Arrow hha = arrow(hh);
          bool allowed = mode == AxiomMode::Uniform ||
                         strict_interchange(form_of(hha, p, wa), form_of(hha, j, fa));
          if (allowed)
            emit("interchange", Term::cmp(Term::cmp(hh, j, f), p, w), rebuild);
        }
      }
    }

    // identity expansion
    if (!identity_expansion) return;
    Arrow ua = arrow(u);
    for (const Term& chain : identity_chains(ua.codomain, ua.kind))
      emit("left-identity", Term::cmp(chain, 0, u), rebuild);
    for (size_t i = 0; i < ua.arity(); ++i) {
      Kind need = forced_argument_kind(ua.kind, ua.arity(), i);
      for (const Term& chain : identity_chains(ua.domain[i], need))
        emit("right-identity", Term::cmp(u, i, chain), rebuild);
    }
  }

  void walk(const Term& u, const std::function<Term(const Term&)>& rebuild) {
    at_root(u, rebuild);
    switch (u.tag()) {
      case Term::Tag::Gen:
      case Term::Tag::Id:
        break;
      case Term::Tag::Loosen: {
        Side s = u.loosen_side();
        walk(u.body(),
             [&, s](const Term& r) { return rebuild(Term::loosen(s, r)); });
        break;
      }
      case Term::Tag::Cmp: {
        Term h = u.host();
        Term f = u.arg();
        size_t i = u.pos();
        walk(h, [&, i, f](const Term& r) { return rebuild(Term::cmp(r, i, f)); });
        walk(f, [&, i, h](const Term& r) { return rebuild(Term::cmp(h, i, r)); });
        break;
      }
    }
  }
};

}  // namespace

std::vector<Rewrite> law_instances(const Signature& sig, const Term& t, const LawOptions& opts) {
  infer(sig, t);
  std::vector<Rewrite> out;
  Rewriter rw{sig, opts.mode, opts.identity_expansion, out};
  rw.walk(t, [](const Term& r) { return r; });
  return out;
}

std::vector<Rewrite> law_instances(const Signature& sig, const Term& t, AxiomMode mode) {
  return law_instances(sig, t, LawOptions{mode, true});
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

Closure rewrite_closure(const Signature& sig, const std::vector<Term>& seeds,
                        const LawOptions& laws, int step_bound, size_t size_bound, size_t guard,
                        const std::function<void(const Term&)>& on_visit) {
  Closure cl;
  std::deque<Term> frontier;
  for (const Term& s : seeds) {
    if (s.size() > size_bound) continue;
    if (cl.visited.insert(s.encode()).second) {
      frontier.push_back(s);
      if (on_visit) on_visit(s);
    }
  }
  while (!frontier.empty() && cl.rounds < step_bound) {
    ++cl.rounds;
    std::deque<Term> next;
    for (const Term& u : frontier) {
      for (const Rewrite& rw : law_instances(sig, u, laws)) {
        if (rw.term.size() > size_bound) continue;
        if (cl.visited.size() >= guard)
          fail(ErrCode::CardinalityGuard, "rewrite closure exceeded " + std::to_string(guard));
        if (cl.visited.insert(rw.term.encode()).second) {
          next.push_back(rw.term);
          if (on_visit) on_visit(rw.term);
        }
      }
    }
    frontier = std::move(next);
  }
  cl.saturated = frontier.empty();
  return cl;
}

OracleResult oracle_equal(const Signature& sig, const Term& t, const Term& s,
                          const OracleOptions& opts) {
  Arrow at = infer(sig, t);
  Arrow as = infer(sig, s);
  if (!(at == as))
    fail(ErrCode::ArrowMismatch, at.encode() + " vs " + as.encode());

  OracleResult res;
  std::string target = s.encode();
  if (t.encode() == target) {
    res.verdict = OracleVerdict::Equal;
    res.explored = 1;
    return res;
  }
  size_t size_bound = opts.size_bound.value_or(std::max(t.size(), s.size()) + 4);

  std::unordered_set<std::string> visited{t.encode()};
  std::deque<Term> frontier{t};
  while (!frontier.empty() && res.rounds < opts.step_bound) {
    ++res.rounds;
    std::deque<Term> next;
    for (const Term& u : frontier) {
      for (const Rewrite& rw : law_instances(sig, u, LawOptions{opts.mode, true})) {
        if (rw.term.size() > size_bound) continue;
        std::string enc = rw.term.encode();
        if (enc == target) {
          res.verdict = OracleVerdict::Equal;
          res.explored = visited.size();
          return res;
        }
        if (visited.size() >= opts.guard) {
          res.verdict = OracleVerdict::Unknown;
          res.explored = visited.size();
          return res;
        }
        if (visited.insert(std::move(enc)).second) next.push_back(rw.term);
      }
    }
    frontier = std::move(next);
  }
  res.explored = visited.size();
  res.saturated = frontier.empty();
  res.verdict = res.saturated ? OracleVerdict::Distinct : OracleVerdict::Unknown;
  return res;
}

// ---------------------------------------------------------------------------
// term enumeration
// ---------------------------------------------------------------------------

std::vector<Term> enumerate_terms(const Signature& sig, int max_generator_occurrences,
                                  const EnumerateOptions& opts) {
  if (max_generator_occurrences < 1) {
    if (opts.empty_on_zero && max_generator_occurrences == 0) return {};
    fail(ErrCode::BadInput, "generator-occurrence bound must be at least 1");
  }

  struct Entry {
    Term term;
    Arrow arrow;
  };
  // layers[k] = all terms with exactly k generator occurrences
  std::vector<std::vector<Entry>> layers;
  size_t total = 0;

  auto guard_check = [&](size_t add) {
    total += add;
    if (total > opts.guard)
      fail(ErrCode::CardinalityGuard,
           "term enumeration exceeded " + std::to_string(opts.guard));
  };

  auto push_with_loosenings = [&](std::vector<Entry>& layer, Term t, Arrow a) {
    layer.push_back({t, a});
    guard_check(1);
    if (a.kind.left_tight) {
      Arrow la = a;
      la.kind.left_tight = false;
      layer.push_back({Term::loosen(Side::Left, t), la});
      guard_check(1);
    }
    if (a.kind.right_tight) {
      Arrow ra = a;
      ra.kind.right_tight = false;
      layer.push_back({Term::loosen(Side::Right, t), ra});
      guard_check(1);
      if (a.kind.left_tight) {
        Arrow lra = a;
        lra.kind = kLL;
        layer.push_back({Term::loosen(Side::Left, Term::loosen(Side::Right, t)), lra});
        layer.push_back({Term::loosen(Side::Right, Term::loosen(Side::Left, t)), lra});
        guard_check(2);
      }
    }
  };

  // layer 0: bare identity chains
  layers.emplace_back();
  for (const ObjectId& x : sig.objects())
    push_with_loosenings(layers[0], Term::id(x), Arrow{kTT, {x}, x});

  for (int k = 1; k <= max_generator_occurrences; ++k) {
    layers.emplace_back();
    std::vector<Entry>& layer = layers[k];
    if (k == 1)
      for (const GeneratorDecl& g : sig.generators())
        push_with_loosenings(layer, Term::gen(g.name), g.arrow);
    for (int a = 1; a < k; ++a) {
      int b = k - a;
      for (const Entry& host : layers[a]) {
        size_t n = host.arrow.arity();
        for (size_t i = 0; i < n; ++i) {
          Kind need = forced_argument_kind(host.arrow.kind, n, i);
          const ObjectId& obj = host.arrow.domain[i];
          for (const Entry& argent : layers[b]) {
            if (!(argent.arrow.kind == need) || argent.arrow.codomain != obj) continue;
            Arrow out;
            out.kind = host.arrow.kind;
            out.codomain = host.arrow.codomain;
            out.domain.reserve(n + argent.arrow.arity() - 1);
            out.domain.insert(out.domain.end(), host.arrow.domain.begin(),
                              host.arrow.domain.begin() + i);
            out.domain.insert(out.domain.end(), argent.arrow.domain.begin(),
                              argent.arrow.domain.end());
            out.domain.insert(out.domain.end(), host.arrow.domain.begin() + i + 1,
                              host.arrow.domain.end());
            push_with_loosenings(layer, Term::cmp(host.term, i, argent.term), out);
          }
        }
      }
    }
  }

  std::vector<Term> out;
  out.reserve(total);
  for (const auto& layer : layers)
    for (const Entry& e : layer) out.push_back(e.term);
  return out;
}

}  // namespace skewcat
