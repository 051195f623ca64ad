// Prints the first values of a few Dirichlet convolutions and the divisor
// coproduct of 12.
#include "dhopf/arith_series.hpp"
#include "dhopf/dirichlet.hpp"

#include <iostream>

int main() {
    using namespace dhopf;
    const Cochain mu = cochains::moebius(), zeta = cochains::zeta(), id = cochains::identity();

    std::cout << "n   (mu*zeta)(n)  (zeta*zeta)(n)  (id*mu)(n)\n";
    for (std::uint64_t n = 1; n <= 12; ++n)
        std::cout << n << "   " << dirichlet_convolve(mu, zeta, Nat(n)) << "  " << dirichlet_convolve(zeta, zeta, Nat(n))
                  << "  " << dirichlet_convolve(id, mu, Nat(n)) << '\n';

    std::cout << "coproduct of 12: " << render(coproduct_mul(Nat(12))) << '\n';
    std::cout << "unrenormalized coproduct of 12: " << render(coproduct_mul_unrenorm(Nat(12))) << '\n';

    const auto h = named_series("ordered_factorizations", 16);
    std::cout << "ordered factorizations:";
    for (std::size_t n = 1; n <= h.depth(); ++n) std::cout << ' ' << h[n];
    std::cout << '\n';
}
