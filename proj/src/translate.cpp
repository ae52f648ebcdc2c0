#include "mtmodal/translate.hpp"

namespace mtm {

MF tau1(const SF& f) {
    switch (f->k) {
        case SK::Prop: return mProp(f->name);
        case SK::Top: return mk(MK::Top);
        case SK::Bot: return mk(MK::Bot);
        case SK::Neg: return mk(MK::Neg, tau2(f->a));
        case SK::And: return mk(MK::And, tau1(f->a), tau1(f->b));
        case SK::Or: return mk(MK::Or, tau1(f->a), tau1(f->b));
        case SK::Nabla: return mk(MK::DiamNu, mk(MK::BoxNi, tau1(f->a)));
        case SK::Cond: throw std::logic_error("tau1: '>' outside the monotone modal language");
    }
    throw std::logic_error("tau1: bad node");
}

MF tau2(const SF& f) {
    switch (f->k) {
        case SK::Prop: return mProp(f->name);
        case SK::Top: return mk(MK::Top);
        case SK::Bot: return mk(MK::Bot);
        case SK::Neg: return mk(MK::Neg, tau1(f->a));
        case SK::And: return mk(MK::And, tau2(f->a), tau2(f->b));
        case SK::Or: return mk(MK::Or, tau2(f->a), tau2(f->b));
        case SK::Nabla: return mk(MK::BoxNuc, mk(MK::DiamNotNi, tau2(f->a)));
        case SK::Cond: throw std::logic_error("tau2: '>' outside the monotone modal language");
    }
    throw std::logic_error("tau2: bad node");
}

MF tau_cond(const SF& f) {
    switch (f->k) {
        case SK::Prop: return mProp(f->name);
        case SK::Top: return mk(MK::Top);
        case SK::Bot: return mk(MK::Bot);
        case SK::Neg: return mk(MK::Neg, tau_cond(f->a));
        case SK::And: return mk(MK::And, tau_cond(f->a), tau_cond(f->b));
        case SK::Or: return mk(MK::Or, tau_cond(f->a), tau_cond(f->b));
        case SK::Cond: {
            MF at = tau_cond(f->a);
            return mk(MK::Triangle,
                      mk(MK::Cap, mk(MK::BoxNi, at), mk(MK::BoxArrNotNi, at)),
                      tau_cond(f->b));
        }
        case SK::Nabla: throw std::logic_error("tau_cond: 'nabla' outside the conditional language");
    }
    throw std::logic_error("tau_cond: bad node");
}

MTSequent translate_sequent(const SF& lhs, const SF& rhs, Mode mode) {
    if (!mode_ok(lhs, mode) || !mode_ok(rhs, mode))
        throw std::invalid_argument("translate_sequent: sequent mixes modes");
    if (mode == Mode::Nabla) return {tau1(lhs), tau2(rhs)};
    return {tau_cond(lhs), tau_cond(rhs)};
}

}  // namespace mtm
