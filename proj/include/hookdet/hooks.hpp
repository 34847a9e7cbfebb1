#pragma once

#include <string_view>

#include "hookdet/matrix.hpp"

namespace hookdet {

// The four L-shaped equal-entry patterns. A anchors its hooks on the main
// diagonal opening right+below, B opens left+above; C and D are their
// anti-diagonal counterparts.
enum class HookShape { A, B, C, D };

const char* to_string(HookShape s);
HookShape hook_shape_from_string(std::string_view s);

// Level k such that entry (r,c) of the order-m pattern is x_k.
// Closed forms: A -> m-min(r,c)+1; B -> max(r,c); C -> max(m-c+1, r);
// D -> max(m-r+1, c).
int hook_entry_level(HookShape shape, int m, int r, int c);

// The m x m pattern over the variable family of the given block.
PolyMatrix hook_matrix(HookShape shape, int m, int block_row = 1,
                       int block_col = 1);

// Exponent e in det = (-1)^e * prod(x_k - x_{k+1}): 0 for A and B,
// floor(m/2) for C and D.
int hook_sign_exponent(HookShape shape, int m);

// (-1)^e * prod_{k=1..m} (x_k - x_{k+1}) with x_{m+1} = 0.
Polynomial hook_det_formula(HookShape shape, int m, int block_row = 1,
                            int block_col = 1);

// The row/column interchanges R_i <-> R_{m-i+1} (and/or columns) that carry
// the shape-A pattern onto this shape. Swap-count parity equals
// hook_sign_exponent's parity.
SwapSchedule hook_reversal_schedule(HookShape shape, int m);

}  // namespace hookdet
