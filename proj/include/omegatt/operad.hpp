#ifndef OMEGATT_OPERAD_HPP
#define OMEGATT_OPERAD_HPP

#include <map>

#include "omegatt/synthesis.hpp"

namespace omegatt {

// The unit law over the basic n-cell: every component is the top variable of
// its boundary context.
CompositionLaw identity_law(int n);

// A law-labelled diagram: an outer law over pi plus one law per cell of pi,
// with arity(labels[c]) of ambient dim(c) and boundary compatibility
// src_law(labels[c]) = labels[source(c)], tgt_law(labels[c]) = labels[target(c)]
// (structural equality).
struct LabelledLawDiagram {
  CompositionLaw outer;
  std::map<CellRef, CompositionLaw> labels;
};

Check validate_labels(const LabelledLawDiagram& d);

// A term over gamma(m.from) carried into gamma(m.to) along a cell map.
TermPtr transport_term(const TermPtr& t, const CellMap& m);

// Operadic composition: substitution of laws along diagram substitution.
// The composite's arity is exactly the pasting-level substitute result, and
// each component is the outer component with every cell variable replaced by
// the transported rho of the corresponding label.
CompositionLaw compose_laws(const LabelledLawDiagram& d);

// The action on terms: rho substituted along a checked context map into
// gamma(arity).
TermPtr apply_law(const CompositionLaw& law, const ContextMap& f);

// Unit axioms: composing under an identity outer law, and composing with
// all-identity labels, both return the law up to alpha.
Check check_unit_axioms(const CompositionLaw& law);

// One associativity instance: composing inner-then-outer against
// flattening-then-composing, compared componentwise up to def_eq.
// labels2 labels the cells of compose_laws({outer, labels1}).arity.
Check check_assoc_instance(const CompositionLaw& outer,
                           const std::map<CellRef, CompositionLaw>& labels1,
                           const std::map<CellRef, CompositionLaw>& labels2);

// Identity labelling of a diagram by unit laws (helper for both axioms).
std::map<CellRef, CompositionLaw> identity_law_labels(const PastingDiagram& pd);

// Labels for the basic n-cell putting `law` on the top cell and its iterated
// boundary laws below.
std::map<CellRef, CompositionLaw> single_label(const CompositionLaw& law);

}  // namespace omegatt

#endif
