#include "grobfan/fan.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "grobfan/lp.hpp"

namespace grobfan {

namespace {

struct IVecLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return ivec_lex_compare(a, b) == Ordering::Less;
  }
};

// Scoped wall-clock + LP-counter accounting onto a RunStats.
class StatsScope {
 public:
  explicit StatsScope(RunStats* s)
      : stats_(s), lp0_(lp_invocation_count()),
        t0_(std::chrono::steady_clock::now()) {}
  ~StatsScope() {
    if (!stats_) return;
    stats_->lp_calls += lp_invocation_count() - lp0_;
    stats_->wall_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
            .count();
  }

 private:
  RunStats* stats_;
  std::uint64_t lp0_;
  std::chrono::steady_clock::time_point t0_;
};

std::vector<IntVec> dedup_primitive_diffs(const MarkedBasis& g) {
  std::set<IntVec, IVecLess> out;
  for (const IntVec& d : marked_differences(g)) out.insert(primitive(d));
  return {out.begin(), out.end()};
}

std::vector<IntVec> positivity_rows(size_t n) {
  std::vector<IntVec> rows;
  rows.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    IntVec e(n, Integer(0));
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return rows;
}

// Algebraic facet pretest: if alpha supports a facet then the initial
// forms towards it are a Gröbner basis of what they generate, so every
// nonzero S-polynomial of the restriction must have a term inside the
// initial ideal of g.  Candidates failing this are not facets and are
// dropped before any LP runs.  Never rejects a genuine facet.
bool passes_pretest(const MarkedBasis& g, const IntVec& alpha) {
  MarkedBasis h = restrict_initial_forms(g, alpha);
  const auto& e = h.elements();
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = i + 1; j < e.size(); ++j) {
      // two bare marked terms S-reduce to zero identically
      if (e[i].body().terms().size() < 2 && e[j].body().terms().size() < 2)
        continue;
      Polynomial s = s_polynomial(e[i], e[j]);
      if (s.is_zero()) continue;
      bool reducible = false;
      for (const Term& t : s.terms()) {
        for (const MarkedPolynomial& d : g.elements()) {
          if (divides(d.marked_exponent(), t.exp)) { reducible = true; break; }
        }
        if (reducible) break;
      }
      if (!reducible) return false;
    }
  }
  return true;
}

Cone cone_from_basis(const MarkedBasis& g) {
  std::vector<IntVec> raws = dedup_primitive_diffs(g);
  std::vector<IntVec> survivors;
  survivors.reserve(raws.size());
  for (IntVec& a : raws) {
    if (passes_pretest(g, a)) survivors.push_back(std::move(a));
  }
  Cone c = canonicalize(Cone(g.n(), {}, std::move(survivors)));
  if (!c.equations().empty())
    throw GuardError(
        "Gröbner cone is not full-dimensional; the marking is incoherent");
  return c;
}

bool facet_is_flippable(const Cone& cone, size_t facet_index) {
  std::vector<IntVec> strict;
  for (size_t j = 0; j < cone.inequalities().size(); ++j)
    if (j != facet_index) strict.push_back(cone.inequalities()[j]);
  for (IntVec& e : positivity_rows(cone.n())) strict.push_back(std::move(e));
  return strictly_feasible({cone.inequalities()[facet_index]}, strict)
      .has_value();
}

struct Geometry {
  Cone cone;
  std::vector<FacetNormal> facets;
};

Geometry compute_geometry(const MarkedBasis& g, RunStats* stats) {
  if (stats) stats->facet_computations += 1;
  Geometry geo{cone_from_basis(g), {}};
  geo.facets.reserve(geo.cone.inequalities().size());
  for (size_t i = 0; i < geo.cone.inequalities().size(); ++i) {
    geo.facets.push_back(
        FacetNormal{geo.cone.inequalities()[i], facet_is_flippable(geo.cone, i)});
  }
  return geo;
}

// Strictly positive interior point of the cone cut out by the raw
// normals, scaled to a primitive integer vector.
IntVec positive_interior_point(const MarkedBasis& g,
                               const std::vector<IntVec>& raws) {
  std::vector<IntVec> strict = raws;
  for (IntVec& e : positivity_rows(g.n())) strict.push_back(std::move(e));
  auto pt = strictly_feasible({}, strict);
  if (!pt)
    throw GuardError(
        "no strictly positive interior point; the marking is incoherent");
  return primitive(*pt);
}

std::optional<IntVec> search_edge_impl(const MarkedBasis& g,
                                       const TermOrderMatrix& target,
                                       RunStats* stats) {
  if (stats) stats->shoots += 1;
  std::vector<IntVec> raws = dedup_primitive_diffs(g);
  // Redundant inequalities never win the shoot (they stay strictly
  // positive until after the exit facet), so the raw system suffices;
  // no canonicalization is needed on this hot path.
  std::vector<const IntVec*> candidates;
  for (const IntVec& a : raws)
    if (target.lex_sign(a) < 0) candidates.push_back(&a);
  if (candidates.empty()) return std::nullopt;  // g is the sink
  IntVec sigma = positive_interior_point(g, raws);
  const IntVec* best = candidates[0];
  Integer d_best = dot(sigma, *best);
  for (size_t i = 1; i < candidates.size(); ++i) {
    const IntVec& a = *candidates[i];
    Integer da = dot(sigma, a);
    // t_a < t_best  iff  target.(sigma.best * a - sigma.a * best) is
    // lexicographically negative (the symbolic-epsilon comparison).
    IntVec u = ivec_sub(ivec_scale(d_best, a), ivec_scale(da, *best));
    int s = target.lex_sign(u);
    if (s == 0)
      throw GuardError("search edge tie between distinct facet hyperplanes");
    if (s < 0) {
      best = &a;
      d_best = da;
    }
  }
  return *best;
}

MarkedBasis flip_impl(const MarkedBasis& g, const IntVec& alpha,
                      RunStats* stats) {
  if (stats) stats->flips += 1;
  MarkedBasis restricted = restrict_initial_forms(g, alpha);
  std::vector<Polynomial> bodies;
  bodies.reserve(restricted.size());
  for (const MarkedPolynomial& e : restricted.elements())
    bodies.push_back(e.body());
  // The marked reduced basis of in_v(I) for the opposite order: higher
  // <-alpha, .> wins; ties would mean alpha was not a facet direction.
  DirectionalOrder opposite(ivec_neg(alpha));
  MarkedBasis other = buchberger(bodies, opposite);
  // Selection orders keep the divisions below on the classical
  // single-descent step bound: r is strictly positive in the wall's
  // relative interior, so [r, alpha] is a term order compatible with
  // g's marking and [r, -alpha] with the flipped one.
  std::vector<IntVec> strict;
  for (IntVec& a : dedup_primitive_diffs(g)) {
    if (!integer_multiple_of(a, alpha, nullptr)) strict.push_back(std::move(a));
  }
  for (IntVec& e : positivity_rows(g.n())) strict.push_back(std::move(e));
  auto wall = strictly_feasible({alpha}, strict);
  if (!wall)
    throw GuardError("flip direction is not a flippable facet normal");
  IntVec r = primitive(*wall);
  TermOrderMatrix sel_old(std::vector<IntVec>{r, alpha}, g.n());
  TermOrderMatrix sel_new(std::vector<IntVec>{r, ivec_neg(alpha)}, g.n());
  // Lift: h |-> h - normal_form(h, g) lies in the ideal and keeps h as
  // its initial-form part; the old basis reduces away everything below.
  std::vector<MarkedPolynomial> lifted;
  lifted.reserve(other.size());
  for (const MarkedPolynomial& h : other.elements()) {
    Polynomial lift =
        h.body() - normal_form(h.body(), g, kDefaultReductionGuard, &sel_old);
    const Rational* c = lift.coeff_of(h.marked_exponent());
    if (!c || *c != 1)
      throw GuardError("flip lift lost its marked term; not a facet normal");
    lifted.emplace_back(std::move(lift), h.marked_exponent());
  }
  return autoreduce(g.n(), std::move(lifted), kDefaultReductionGuard, &sel_new);
}

// Facet-normal validation used by the public flip(): alpha must be a
// primitive inner facet normal of cone_of(g) whose facet interior meets
// the open positive orthant.
void validate_flip_input(const MarkedBasis& g, const IntVec& alpha) {
  if (alpha.size() != g.n()) throw Error("facet normal has wrong length");
  if (is_zero(alpha)) throw Error("facet normal is zero");
  if (primitive(alpha) != alpha) throw Error("facet normal is not primitive");
  std::vector<IntVec> raws = dedup_primitive_diffs(g);
  IntVec sigma = positive_interior_point(g, raws);
  if (dot(sigma, alpha) <= 0)
    throw Error("not an inner facet normal of the Gröbner cone");
  std::vector<IntVec> strict;
  for (const IntVec& a : raws) {
    if (!integer_multiple_of(a, alpha, nullptr)) strict.push_back(a);
  }
  for (IntVec& e : positivity_rows(g.n())) strict.push_back(std::move(e));
  if (!strictly_feasible({alpha}, strict))
    throw Error("not a flippable facet of the Gröbner cone");
}

std::string orbit_min_key(const MarkedBasis& g, const PermutationGroup& group,
                          MarkedBasis* representative, size_t* stabilizer) {
  std::string best;
  size_t stab = 0;
  const std::string& own = g.key();
  for (const Permutation& pi : group.elements()) {
    MarkedBasis image = apply_permutation(pi, g);
    if (image.key() == own) ++stab;
    if (best.empty() || image.key() < best) {
      best = image.key();
      if (representative) *representative = std::move(image);
    }
  }
  if (stabilizer) *stabilizer = stab;
  return best;
}

}  // namespace

std::vector<IntVec> cone_raw_inequalities(const MarkedBasis& g) {
  return dedup_primitive_diffs(g);
}

TermOrderMatrix coherent_order(const MarkedBasis& g) {
  IntVec sigma = positive_interior_point(g, dedup_primitive_diffs(g));
  return TermOrderMatrix(std::vector<IntVec>{std::move(sigma)}, g.n());
}

Cone cone_of(const MarkedBasis& g) { return cone_from_basis(g); }

std::vector<FacetNormal> facet_normals(const MarkedBasis& g,
                                       bool flippable_only, RunStats* stats) {
  StatsScope scope(stats);
  Geometry geo = compute_geometry(g, stats);
  if (!flippable_only) return geo.facets;
  std::vector<FacetNormal> out;
  for (FacetNormal& f : geo.facets)
    if (f.flippable) out.push_back(std::move(f));
  return out;
}

MarkedBasis restrict_initial_forms(const MarkedBasis& g, const IntVec& alpha) {
  if (is_zero(alpha)) throw Error("restriction direction is zero");
  std::vector<MarkedPolynomial> out;
  out.reserve(g.size());
  for (const MarkedPolynomial& e : g.elements()) {
    std::vector<Term> kept;
    for (const Term& t : e.body().terms()) {
      if (t.exp == e.marked_exponent()) {
        kept.push_back(t);
        continue;
      }
      IntVec d = exp_diff(t.exp, e.marked_exponent());
      if (integer_multiple_of(d, alpha, nullptr)) kept.push_back(t);
    }
    out.emplace_back(Polynomial(g.n(), std::move(kept)), e.marked_exponent());
  }
  return MarkedBasis(g.n(), std::move(out));
}

MarkedBasis flip(const MarkedBasis& g, const IntVec& alpha, RunStats* stats,
                 bool validate) {
  StatsScope scope(stats);
  if (validate) validate_flip_input(g, alpha);
  return flip_impl(g, alpha, stats);
}

std::optional<FacetNormal> search_edge(const MarkedBasis& g,
                                       const TermOrderMatrix& target,
                                       RunStats* stats) {
  StatsScope scope(stats);
  std::optional<IntVec> hit = search_edge_impl(g, target, stats);
  if (!hit) return std::nullopt;
  return FacetNormal{std::move(*hit), true};
}

void reverse_search(const std::vector<Polynomial>& gens,
                    const TermOrderMatrix& target,
                    const std::function<void(const MarkedBasis&)>& emit,
                    RunStats* stats) {
  StatsScope scope(stats);
  struct Frame {
    MarkedBasis basis;
    std::vector<IntVec> candidates;  // flippable facets, target-positive
    size_t next = 0;
  };
  auto make_frame = [&](MarkedBasis b) {
    Geometry geo = compute_geometry(b, stats);
    Frame f{std::move(b), {}, 0};
    for (const FacetNormal& fn : geo.facets) {
      if (fn.flippable && target.lex_sign(fn.normal) > 0)
        f.candidates.push_back(fn.normal);
    }
    return f;
  };

  MarkedBasis sink = buchberger(gens, target);
  emit(sink);
  std::vector<Frame> stack;
  stack.push_back(make_frame(std::move(sink)));
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == f.candidates.size()) {
      stack.pop_back();
      continue;
    }
    const IntVec alpha = f.candidates[f.next++];
    MarkedBasis u = flip_impl(f.basis, alpha, stats);
    std::optional<IntVec> back = search_edge_impl(u, target, stats);
    // u is our child exactly when its search edge is the shared facet,
    // whose inner normal from u's side is -alpha.
    if (back && *back == ivec_neg(alpha)) {
      emit(u);
      stack.push_back(make_frame(std::move(u)));
    }
  }
}

void bfs_enumerate(const MarkedBasis& start,
                   const std::function<void(const MarkedBasis&)>& emit,
                   RunStats* stats) {
  StatsScope scope(stats);
  std::unordered_set<std::string> seen{start.key()};
  std::deque<MarkedBasis> queue{start};
  emit(start);
  while (!queue.empty()) {
    MarkedBasis g = std::move(queue.front());
    queue.pop_front();
    Geometry geo = compute_geometry(g, stats);
    for (const FacetNormal& f : geo.facets) {
      if (!f.flippable) continue;
      MarkedBasis u = flip_impl(g, f.normal, stats);
      if (seen.insert(u.key()).second) {
        emit(u);
        queue.push_back(std::move(u));
      }
    }
  }
}

std::vector<MarkedBasis> enumerate_all(const std::vector<Polynomial>& gens,
                                       const TermOrderMatrix& target,
                                       RunStats* stats) {
  std::vector<MarkedBasis> out;
  reverse_search(gens, target,
                 [&](const MarkedBasis& g) { out.push_back(g); }, stats);
  return out;
}

Polynomial apply_permutation(const Permutation& pi, const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    ExpVec e(t.exp.size());
    for (size_t i = 0; i < t.exp.size(); ++i) e[pi.image[i]] = t.exp[i];
    terms.push_back({t.coeff, std::move(e)});
  }
  return Polynomial(f.n(), std::move(terms));
}

IntVec apply_permutation(const Permutation& pi, const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[pi.image[i]] = v[i];
  return r;
}

MarkedBasis apply_permutation(const Permutation& pi, const MarkedBasis& g) {
  std::vector<MarkedPolynomial> elems;
  elems.reserve(g.size());
  for (const MarkedPolynomial& e : g.elements()) {
    ExpVec marked(e.marked_exponent().size());
    for (size_t i = 0; i < marked.size(); ++i)
      marked[pi.image[i]] = e.marked_exponent()[i];
    elems.emplace_back(apply_permutation(pi, e.body()), std::move(marked));
  }
  return MarkedBasis(g.n(), std::move(elems));
}

PermutationGroup::PermutationGroup(std::vector<Permutation> generators,
                                   size_t n, size_t cap)
    : n_(n) {
  for (const Permutation& g : generators) {
    if (g.image.size() != n) throw SymmetryError("permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (size_t v : g.image) {
      if (v >= n || hit[v]) throw SymmetryError("permutation is not a bijection");
      hit[v] = true;
    }
  }
  Permutation id;
  id.image.resize(n);
  for (size_t i = 0; i < n; ++i) id.image[i] = i;
  std::set<std::vector<size_t>> seen{id.image};
  std::deque<Permutation> queue{id};
  elements_.push_back(id);
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& g : generators) {
      Permutation q;
      q.image.resize(n);
      for (size_t i = 0; i < n; ++i) q.image[i] = g.image[p.image[i]];
      if (seen.insert(q.image).second) {
        if (seen.size() > cap)
          throw SymmetryError("symmetry group exceeds the element cap");
        elements_.push_back(q);
        queue.push_back(std::move(q));
      }
    }
  }
}

bool validate_symmetry(const std::vector<Polynomial>& gens,
                       const std::vector<Permutation>& group_gens) {
  if (gens.empty()) return false;
  size_t n = 0;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) n = g.n();
  std::vector<size_t> natural(n);
  for (size_t i = 0; i < n; ++i) natural[i] = i;
  MarkedBasis gb = buchberger(gens, TermOrderMatrix::degrevlex(natural));
  for (const Permutation& pi : group_gens) {
    if (pi.image.size() != n) return false;
    for (const Polynomial& f : gens) {
      if (f.is_zero()) continue;
      if (!normal_form(apply_permutation(pi, f), gb).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Orbit> symmetric_bfs(const MarkedBasis& start,
                                 const PermutationGroup& group,
                                 RunStats* stats) {
  StatsScope scope(stats);
  std::vector<Orbit> orbits;
  std::unordered_set<std::string> seen;
  std::deque<MarkedBasis> queue;

  auto visit = [&](const MarkedBasis& g) {
    MarkedBasis rep = g;
    size_t stab = 1;
    std::string key = orbit_min_key(g, group, &rep, &stab);
    if (!seen.insert(key).second) return;
    orbits.push_back(Orbit{rep, group.order() / stab});
    queue.push_back(std::move(rep));
  };

  visit(start);
  while (!queue.empty()) {
    MarkedBasis g = std::move(queue.front());
    queue.pop_front();
    Geometry geo = compute_geometry(g, stats);
    for (const FacetNormal& f : geo.facets) {
      if (!f.flippable) continue;
      visit(flip_impl(g, f.normal, stats));
    }
  }
  return orbits;
}

std::vector<MarkedBasis> expand_orbits(const std::vector<Orbit>& orbits,
                                       const PermutationGroup& group) {
  std::map<std::string, MarkedBasis> seen;
  for (const Orbit& o : orbits) {
    for (const Permutation& pi : group.elements()) {
      MarkedBasis image = apply_permutation(pi, o.representative);
      std::string k = image.key();
      seen.emplace(std::move(k), std::move(image));
    }
  }
  std::vector<MarkedBasis> out;
  out.reserve(seen.size());
  for (auto& [k, g] : seen) out.push_back(std::move(g));
  return out;
}

std::vector<std::uint64_t> f_vector(const std::vector<MarkedBasis>& maximal) {
  if (maximal.empty()) return {};
  size_t n = maximal[0].n();
  std::map<std::string, Cone> faces;
  for (const MarkedBasis& g : maximal) collect_faces(cone_of(g), faces);
  size_t h = n;
  for (const auto& [k, c] : faces) h = std::min(h, cone_dimension(c));
  std::vector<std::uint64_t> counts(n - h + 1, 0);
  for (const auto& [k, c] : faces) counts[cone_dimension(c) - h] += 1;
  return counts;
}

std::vector<Polynomial> universal_basis(const std::vector<MarkedBasis>& maximal) {
  std::map<std::string, Polynomial> seen;
  for (const MarkedBasis& g : maximal) {
    for (const MarkedPolynomial& e : g.elements()) {
      // scale so the canonical leading coefficient is 1: the two marked
      // variants of the same polynomial collapse
      Polynomial p = e.body().scaled(1 / e.body().canonical_leading().coeff);
      std::string k = p.key();
      seen.emplace(std::move(k), std::move(p));
    }
  }
  std::vector<Polynomial> out;
  out.reserve(seen.size());
  for (auto& [k, p] : seen) out.push_back(std::move(p));
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    Ordering c = grlex_compare(a.canonical_leading().exp,
                               b.canonical_leading().exp);
    if (c != Ordering::Equal) return c == Ordering::Greater;
    return a.key() < b.key();
  });
  return out;
}

bool validate_marked_basis(const MarkedBasis& g) {
  const auto& e = g.elements();
  for (size_t i = 0; i < e.size(); ++i) {
    for (const Term& t : e[i].body().terms()) {
      for (size_t j = 0; j < e.size(); ++j) {
        if (i == j && t.exp == e[i].marked_exponent()) continue;
        if (divides(e[j].marked_exponent(), t.exp)) return false;
      }
    }
  }
  std::vector<IntVec> strict = marked_differences(g);
  for (IntVec& p : positivity_rows(g.n())) strict.push_back(std::move(p));
  return strictly_feasible({}, strict).has_value();
}

}  // namespace grobfan
