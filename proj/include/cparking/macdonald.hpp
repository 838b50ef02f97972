/**
 * @file macdonald.hpp
 * @brief Modified Macdonald polynomials, the nabla operator, and the
 *        Haglund--Morse--Zabrocki operators C_a / C_alpha.
 *
 * H~_mu is built from the combinatorial fillings formula (sum over maps
 * mu -> {1..N} weighted q^inv t^maj). nabla acts by expanding over the
 * H~ eigenbasis and scaling coordinates by T_mu^m.
 */
#pragma once

#include <map>

#include "cparking/partition.hpp"
#include "cparking/qt.hpp"
#include "cparking/sympoly.hpp"

namespace cparking {

struct MacdonaldTable {
    int degree = 0;
    int nvars = 0;
    std::map<Partition, SymPoly> entries;  // mu -> H~_mu in N variables
    std::map<Partition, QTCoeff> eigen;    // mu -> T_mu
};

/// H~_mu restricted to N variables; throws TooFewVariables when N < |mu|.
SymPoly htilde(const Partition& mu, int N);

/// T_mu = prod over cells t^{i-1} q^{j-1}.
QTCoeff t_mu(const Partition& mu);

/// Build (and cache) the degree-d table in N variables; the entries are
/// rank-checked once per table.
const MacdonaldTable& macdonald_table(int degree, int nvars);

/// nabla^m f, any integer m (negative = inverse scaling). deg f <= N.
SymPoly nabla_power(const SymPoly& f, int m, int N);

/// HMZ operator: C_a f = (-q)^{1-a} f[X-(q-1)/(qz)] sum_j z^j h_j[X] |_{z^a}.
SymPoly hmz_c(int a, const SymPoly& f);

/// C_alpha = C_{alpha_k} ... C_{alpha_1} . 1 (alpha_1 applied first).
SymPoly c_alpha(const Composition& alpha, int N);

/// Coefficients d_{lambda,alpha} with s_lambda = sum_alpha d C_alpha, from
/// the HMZ recursion s_lambda = (-q)^{lambda_1-1} sum_i C_{lambda_1+i}(e_i-perp s_mu).
std::map<Composition, QTCoeff> schur_to_calpha(const Partition& lambda);

}  // namespace cparking
