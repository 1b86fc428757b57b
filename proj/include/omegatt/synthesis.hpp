#ifndef OMEGATT_SYNTHESIS_HPP
#define OMEGATT_SYNTHESIS_HPP

#include <vector>

#include "omegatt/contexts.hpp"
#include "omegatt/kernel.hpp"
#include "omegatt/pasting.hpp"

namespace omegatt {

// A composition law for its arity diagram (ambient dimension n): terms
// sigma_i, tau_i over the (n-i)-fold boundary context for i < n, and rho
// over the full context, typed by the boundary type tower below.
struct CompositionLaw {
  PastingDiagram arity;
  std::vector<TermPtr> sigma, tau;
  TermPtr rho;
};

// The shared lower data of two parallel laws: a law minus rho.
struct ParallelPair {
  PastingDiagram arity;
  std::vector<TermPtr> sigma, tau;
};

ParallelPair pair_of(const CompositionLaw& law);

// The type over gamma(boundary^{n-level}(pd)) that the level-th component of
// a law with the given lower data must inhabit: X at level 0, and
// Id(-, sigma_{l-1}[src], tau_{l-1}[tgt]) above.
TypePtr law_component_type(const PastingDiagram& pd, int level,
                           const std::vector<TermPtr>& sigma,
                           const std::vector<TermPtr>& tau);

Check check_law(const CompositionLaw& law);
Check check_pair(const ParallelPair& pair);

// Which top-dimensional cell the filler eliminates first. Last is the
// normative choice; First exists to reproduce both transitivity terms.
enum class RemovalOrder { Last, First };

// The contraction: produces rho for any parallel pair. A point arity demands
// that every component normalize to an iterated reflexivity (NotCollapsing
// otherwise, which cannot fire on laws built by this library); any other
// arity removes a top cell, recurses along the collapse maps, and wraps the
// result in one eliminator generalizing the removed cell's variables.
TermPtr fill(const ParallelPair& pair, RemovalOrder order = RemovalOrder::Last);

// The canonical law over pd: degenerate lower data built by iterated filling
// from the base (x : X) upwards.
CompositionLaw canonical_law(const PastingDiagram& pd,
                             RemovalOrder order = RemovalOrder::Last);

// Boundary laws over the boundary arity, with rho the top sigma resp. tau.
CompositionLaw src_law(const CompositionLaw& law);
CompositionLaw tgt_law(const CompositionLaw& law);

// arity, component count and componentwise alpha-equality
bool law_equal(const CompositionLaw& a, const CompositionLaw& b);

}  // namespace omegatt

#endif
