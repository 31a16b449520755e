/* The syzygy instance over k[t]/(t^3): E^Phi(A + k) and E^Phi(A + Omega k)
 * are derived equivalent; this drives the whole verification pipeline. */
#include "ayt/shift_instance.hpp"
#include "ayt/textio.hpp"

#include <iostream>

using namespace ayt;

int main(int argc, char** argv)
{
    std::string dir = argc > 1 ? argv[1] : "demos";
    auto file = parse_algebra_file(dir + "/t3.alg");
    auto pa = from_presentation<Fp>(file.pres);
    auto a = AlgebraPtr<Fp>(pa.alg);
    auto k = simple_module(a, 0);
    auto phi = DegreeSet::of({0, 1});
    auto rep = verify_shift_instance(a, k, phi, 4, 1);
    std::cout << "Phi = {0,1}, A = k[t]/(t^3), X = k\n";
    std::cout << "tilting verdict: " << rep.tilting.verdict << "\n";
    std::cout << "dim End(E(N,Tbar)) = " << rep.end_dim << ", dim E^Phi(M) = " << rep.ay_dim
              << "\n";
    std::cout << "fingerprints consistent: " << rep.fingerprints_consistent << "\n";
    std::cout << "verdict: " << rep.verdict << "\n";
    return rep.verdict ? 0 : 1;
}
