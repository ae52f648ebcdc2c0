#pragma once

#include "mtmodal/semantics.hpp"

namespace mtm {

enum class AxiomId { N, P, C, T, Four, FourPrime, Five, B, D, CS, CEM, ID, CN, Tcond };

constexpr AxiomId kAllAxioms[] = {
    AxiomId::N, AxiomId::P, AxiomId::C, AxiomId::T, AxiomId::Four, AxiomId::FourPrime,
    AxiomId::Five, AxiomId::B, AxiomId::D, AxiomId::CS, AxiomId::CEM, AxiomId::ID,
    AxiomId::CN, AxiomId::Tcond};

std::string axiom_name(AxiomId id);
AxiomId axiom_by_name(const std::string& name);
Mode axiom_mode(AxiomId id);  // Nabla for the neighbourhood rows, Cond for the selection rows

SF axiom_formula(AxiomId id);

bool frame_condition(AxiomId id, const NFrame& fr);
bool frame_condition(AxiomId id, const CFrame& fr);

struct EquivResult {
    bool valid;
    bool condition;
    bool agree;
};

EquivResult check_equiv(AxiomId id, const NFrame& fr);
EquivResult check_equiv(AxiomId id, const CFrame& fr);

}  // namespace mtm
