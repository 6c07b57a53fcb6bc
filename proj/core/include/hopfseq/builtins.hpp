#pragma once

#include "hopfseq/constructions.hpp"
#include "hopfseq/groups.hpp"

namespace hopfseq {

/// k[G] with grouplike basis e_g. The default field is Q(z_e) for e the
/// exponent of G (plain Q when e <= 2), so that character values exist in the
/// base field.
HopfPtr group_algebra(const Group& g, const Field* f = nullptr);

/// k(G) = dual of k[G], with delta-function labels.
HopfPtr function_algebra(const Group& g, const Field* f = nullptr);

/// The 4-dimensional algebra with g^2 = 1, x^2 = 0, xg = -gx,
/// Delta(x) = x (x) 1 + g (x) x, over Q.
HopfPtr sweedler_h4();

/// Taft algebra of dimension n^2: g^n = 1, x^n = 0, xg = q gx with
/// q = z_n^qpow a primitive n-th root (gcd(qpow, n) = 1).
HopfPtr taft(int n, long qpow = 1, const Field* f = nullptr);

/// The p^3-dimensional truncation of the quantized enveloping algebra of sl2
/// at q = z_p (p odd >= 3): PBW basis F^a K^b E^c with E^p = F^p = 0, K^p = 1,
/// K E K^{-1} = q^2 E, K F K^{-1} = q^{-2} F, [E, F] = (K - K^{-1})/(q - q^{-1}).
HopfPtr small_quantum_sl2(int p);

/// The coboundary twist of the Sweedler algebra by Psi = (u (x) u) Delta(u^{-1})
/// with u = 1 + x.
Twist sweedler_coboundary_twist();

/// Resolves a CLI builtin spec "name[:key=value,...]"; a bare value after the
/// colon is the primary parameter (group name, n, or p). An optional
/// field=Q|F<p>|Qz<n> overrides the default field where supported.
HopfPtr builtin(const std::string& spec);

const Field* parse_field_name(const std::string& name);

std::vector<std::string> builtin_names();

}  // namespace hopfseq
