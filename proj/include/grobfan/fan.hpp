#pragma once

// The Gröbner fan engine: cones of marked bases, facet search with the
// algebraic pretest, flips across flippable facets, the symbolic-epsilon
// search edge, reverse search / BFS enumeration, symmetry-pruned BFS,
// f-vectors and universal bases.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grobfan/algebra.hpp"
#include "grobfan/cone.hpp"
#include "grobfan/polynomial.hpp"
#include "grobfan/term_order.hpp"

namespace grobfan {

struct RunStats {
  std::uint64_t facet_computations = 0;  // one per vertex whose facets we derive
  std::uint64_t shoots = 0;              // search_edge evaluations
  std::uint64_t flips = 0;               // flip evaluations
  std::uint64_t lp_calls = 0;            // delta of the global LP counter
  double wall_seconds = 0;
};

struct FacetNormal {
  IntVec normal;   // primitive inner normal (points into the cone)
  bool flippable;  // facet relative interior contains a strictly positive point
};

// The closed Gröbner cone of G: canonicalized {u : <u, marked - e> >= 0}.
// Throws GuardError when the system has implied equalities — that means
// the marking is not coherent, so G is not a marked reduced basis of a
// full-dimensional cone.
Cone cone_of(const MarkedBasis& g);

// The raw (pre-canonicalization) inequality normals, exposed for tests.
std::vector<IntVec> cone_raw_inequalities(const MarkedBasis& g);

// A term order realizing g's marking: the primitive strictly positive
// interior point of the raw cone as its first row, reverse-lex
// completed.  Useful as the division selection order when reducing
// against g.  Throws GuardError when the marking is incoherent.
TermOrderMatrix coherent_order(const MarkedBasis& g);

// Irredundant facet normals of cone_of(g) with flippability flags.
// Pipeline: parallel dedup -> algebraic pretest (restricting to a
// candidate direction must keep every nonzero S-polynomial reducible) ->
// LP irredundancy -> flippability LP.  With flippable_only, drops the
// non-flippable ones.
std::vector<FacetNormal> facet_normals(const MarkedBasis& g,
                                       bool flippable_only = false,
                                       RunStats* stats = nullptr);

// Initial forms towards a facet with inner normal alpha: keeps the marked
// term and every term whose exponent difference from the marked exponent
// is an integer multiple of alpha.  For alpha a facet normal this is the
// marked reduced basis of in_v(I), v in the facet's relative interior.
MarkedBasis restrict_initial_forms(const MarkedBasis& g, const IntVec& alpha);

// The marked reduced basis on the other side of the facet with inner
// normal alpha.  alpha must be a primitive flippable facet normal of
// cone_of(g); with validate set this is checked (one LP) and violations
// throw Error.  The traversals pass validate = false because they only
// ever flip normals they just computed.
MarkedBasis flip(const MarkedBasis& g, const IntVec& alpha,
                 RunStats* stats = nullptr, bool validate = true);

// The facet of cone_of(g) through which the symbolic segment from the
// cone's interior towards the target order leaves the cone; none iff g
// is the sink (its cone contains the target).  The returned normal is
// one of cone_of(g)'s facet normals and is always flippable (the exit
// point is a strictly positive point in the facet's relative interior).
std::optional<FacetNormal> search_edge(const MarkedBasis& g,
                                       const TermOrderMatrix& target,
                                       RunStats* stats = nullptr);

// Enumerate every marked reduced basis of <gens>, calling emit exactly
// once per basis.  Reverse search keeps no visited set: it starts at the
// sink buchberger(gens, target) and recurses along ingoing edges whose
// search edge leads back.  Counters: facet computations = vertices,
// flips = shoots = edges of the flip graph.
void reverse_search(const std::vector<Polynomial>& gens,
                    const TermOrderMatrix& target,
                    const std::function<void(const MarkedBasis&)>& emit,
                    RunStats* stats = nullptr);

// Breadth-first enumeration over flippable facets from any starting
// basis, deduplicating by canonical serialization.
void bfs_enumerate(const MarkedBasis& start,
                   const std::function<void(const MarkedBasis&)>& emit,
                   RunStats* stats = nullptr);

std::vector<MarkedBasis> enumerate_all(const std::vector<Polynomial>& gens,
                                       const TermOrderMatrix& target,
                                       RunStats* stats = nullptr);

// --- symmetry ---------------------------------------------------------

// pi acts by substituting x_i -> x_{pi(i)}; images are 0-based here.
struct Permutation {
  std::vector<size_t> image;
  size_t n() const { return image.size(); }
};

Polynomial apply_permutation(const Permutation& pi, const Polynomial& f);
MarkedBasis apply_permutation(const Permutation& pi, const MarkedBasis& g);
IntVec apply_permutation(const Permutation& pi, const IntVec& v);

class PermutationGroup {
 public:
  // Expands the generated group by closure; throws SymmetryError beyond
  // the element cap (the paper's brute-force orbit test needs the full
  // element list).
  PermutationGroup(std::vector<Permutation> generators, size_t n,
                   size_t cap = 1u << 20);
  const std::vector<Permutation>& elements() const { return elements_; }
  size_t order() const { return elements_.size(); }
  size_t n() const { return n_; }

 private:
  size_t n_;
  std::vector<Permutation> elements_;
};

// Every generator must fix the ideal: normal_form of every permuted
// generator against a Gröbner basis of the ideal is zero.
bool validate_symmetry(const std::vector<Polynomial>& gens,
                       const std::vector<Permutation>& group_gens);

struct Orbit {
  MarkedBasis representative;  // canonically smallest in its orbit
  size_t size = 0;
};

// The full basis set an orbit list stands for: every group element
// applied to every representative, deduplicated.  Sizes must add up.
std::vector<MarkedBasis> expand_orbits(const std::vector<Orbit>& orbits,
                                       const PermutationGroup& group);

// BFS over the orbit quotient graph; orbit membership by brute force
// over the expanded group. Sum of orbit sizes equals the total count.
std::vector<Orbit> symmetric_bfs(const MarkedBasis& start,
                                 const PermutationGroup& group,
                                 RunStats* stats = nullptr);

// --- fan-level reports -------------------------------------------------

// Face counts by dimension, from dim h (the homogeneity space, the
// minimal face of every cone) up to n.
std::vector<std::uint64_t> f_vector(const std::vector<MarkedBasis>& maximal);

// Union of all basis polynomials with markings stripped, deduplicated up
// to scaling (canonical-leading coefficient normalized to 1).
std::vector<Polynomial> universal_basis(const std::vector<MarkedBasis>& maximal);

// Coherence: some strictly positive w makes every mark the unique
// w-initial term; reducedness of the marked set is checked structurally.
bool validate_marked_basis(const MarkedBasis& g);

struct FanSummary {
  std::vector<MarkedBasis> maximal;       // representatives when symmetric
  std::vector<std::uint64_t> orbit_sizes; // empty unless symmetric run
  size_t h = 0;
  std::optional<std::vector<std::uint64_t>> fvec;
  RunStats stats;
};

}  // namespace grobfan
