#pragma once

// Epsilon tensors, the braid matrix Lambda, the quantum antisymmetrizer W,
// the metric pairing of forms and the Hodge star on the plane.

#include <map>
#include <span>
#include <vector>

#include "twistcalc/ncalg.hpp"

namespace twistcalc {

using IndexTuple = std::vector<int>;

/// g_ab = g^ab = delta_{a b'}.
inline int metric(const Context& ctx, int a, int b) { return b == ctx.primed(a) ? 1 : 0; }

/// eps_q^{i_1..i_D}: dx^{i_1}...dx^{i_D} = eps_q^{i} dx^1...dx^D. Zero on repeats.
ExactScalar epsilon_q(const Context& ctx, std::span<const int> indices);
/// Same symbol with every q replaced by q^-1.
ExactScalar epsilon_qinv(const Context& ctx, std::span<const int> indices);

/// Lambda^{ab}_{cd} = q_ab delta^a_d delta^b_c.
ExactScalar lambda_entry(const Context& ctx, int a, int b, int c, int d);

/// Row W^{upper}_{.} of the antisymmetrizer on k = |upper| tensor slots,
/// built by the recursion W_k = I_k W_{k-1}, I_k = 1 - I_{k-1} Lambda_{k-1,k}.
const std::map<IndexTuple, ExactScalar>& antisym_row(const Context& ctx, const IndexTuple& upper);
ExactScalar antisym_W(const Context& ctx, const IndexTuple& upper, const IndexTuple& lower);

/// <alpha, beta> for homogeneous forms of equal degree; the result is a function.
Element pairing_plane(const Element& alpha, const Element& beta);

/// Hodge star on the plane, Omega_k -> Omega_{D-k}, left and right function linear.
Element hodge_plane(const Element& alpha);
/// *(dx^{i_1} ... dx^{i_k}) for an ascending index set.
Element hodge_plane_basis(const ContextPtr& ctx, const IndexTuple& indices);

/// All ascending k-subsets of {1..D}.
std::vector<IndexTuple> ascending_subsets(int dim, int k);
/// dx^{i_1} ... dx^{i_k} for any index sequence (normal ordered).
Element wedge_word(const ContextPtr& ctx, std::span<const int> indices);

}  // namespace twistcalc
