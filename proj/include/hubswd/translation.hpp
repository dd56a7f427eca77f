#pragma once
// Cyclic-group machinery: orbits of configurations under letter-level
// translation, rarefaction index, Brillouin zone, and wavelet bases.
//
// Translation here moves the letter at site j to site j+1 (mod N) with no
// fermionic phase; the signed operator on Fock states lives in hubbard.

#include <hubswd/fock.hpp>

#include <complex>
#include <vector>

namespace hubswd {

struct BrillouinZone {
    int n = 0;
    std::vector<int> momenta;  // 0, 1, -1, 2, -2, ..., (+N/2 last for even N)
};

BrillouinZone brillouin_zone(int n);

// Letter-level cyclic shift: site j content moves to site j+1 (mod N).
Configuration translate_letters(const Configuration& c);

struct CyclicOrbit {
    Configuration representative;  // lexicographically smallest element
    int period = 0;                // orbit size, N / kappa
    int kappa = 0;                 // rarefaction index

    std::vector<Configuration> elements() const;  // rep, T rep, T^2 rep, ...
};

// Disjoint orbits covering the sector, sorted by representative.
std::vector<CyclicOrbit> orbits(int n, Sector sector);

// {k in B : k/kappa is an integer}, in Brillouin-zone order.
std::vector<int> rarefied_zone(int n, int kappa);

struct Wavelet {
    CyclicOrbit orbit;
    int k = 0;
    std::vector<std::complex<double>> coeffs;  // over orbit.elements()
};

// One unit-norm wavelet per momentum in B/kappa; the coefficient of the j-th
// translate is exp(i 2 pi k j / N) / sqrt(period), an eigenvector of the
// letter-level translation with eigenvalue exp(-i 2 pi k / N).
std::vector<Wavelet> wavelet_basis(const CyclicOrbit& orbit);

}  // namespace hubswd
