#pragma once

#include "mtmodal/semantics.hpp"

namespace mtm {

// Set-function tables over P(W): table[Z] = value of the operation at Z.
struct NablaTable {
    int size = 0;
    std::vector<Mask> t;  // 2^size entries
    Mask at(Mask z) const { return t[z]; }
    bool operator==(const NablaTable& o) const { return size == o.size && t == o.t; }
};

struct CondTable {
    int size = 0;
    std::vector<Mask> t;  // t[a * 2^size + b]
    Mask at(Mask a, Mask b) const { return t[((std::size_t)a << size) | b]; }
    bool operator==(const CondTable& o) const { return size == o.size && t == o.t; }
};

// complex-algebra operations of single-type frames
Mask nabla_of_frame(const NFrame& fr, Mask x);
Mask cond_of_frame(const CFrame& fr, Mask x, Mask y);
NablaTable nabla_table(const NFrame& fr);
CondTable cond_table(const CFrame& fr);

bool table_monotone(const NablaTable& t);
// finitely meet-preserving in the second coordinate (including the empty meet)
bool table_meet_preserving(const CondTable& t);

// frames back from perfect-algebra operations
NFrame frame_of_nabla(const NablaTable& t);   // requires monotone
CFrame frame_of_cond(const CondTable& t);     // requires meet-preserving

// two-sorted representations
TSNFrame star(const NFrame& fr);
TSCFrame star(const CFrame& fr);
NFrame costar(const TSNFrame& fr);            // requires supported
CFrame costar(const TSCFrame& fr);

NablaTable bullet_down(const TSNFrame& fr);   // requires supported
CondTable bullet_down(const TSCFrame& fr);

TSNFrame bullet_up(const NablaTable& t);      // requires monotone, size <= 5
TSCFrame bullet_up(const CondTable& t);

// the two-sorted frame of the complex algebra (atoms of P(X), P(Y)); identity
// of encodings witnesses the discrete duality
TSNFrame frame_of_complex(const TSNFrame& fr);
TSCFrame frame_of_complex(const TSCFrame& fr);

}  // namespace mtm
