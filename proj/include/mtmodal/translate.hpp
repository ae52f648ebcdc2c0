#pragma once

#include "mtmodal/syntax.hpp"

namespace mtm {

// Positive / negative translations of the monotone modal language and the
// translation of the conditional language into the two-sorted languages.
MF tau1(const SF& f);
MF tau2(const SF& f);
MF tau_cond(const SF& f);

// nabla-sequents translate positionally (tau1 left, tau2 right); conditional
// sequents translate with tau_cond on both sides.
MTSequent translate_sequent(const SF& lhs, const SF& rhs, Mode mode);

}  // namespace mtm
