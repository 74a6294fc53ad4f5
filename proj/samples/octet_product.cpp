// Decomposes 8 x 8 of su(3) and prints the singlet coefficients.

#include "clebsch/clebsch.hpp"

#include <cstdio>

int main() {
    using namespace clebsch;
    const IWeight octet{2, 1, 0};

    const auto d = decompose(octet, octet);
    for (const auto& t : d.terms()) {
        std::printf("%s x%d dim=%lld\n", to_string(t.irrep).c_str(), t.multiplicity,
                    static_cast<long long>(dimension(t.irrep)));
    }

    const IrrepBasis basis(octet);
    const auto singlet = compute_tensor(basis, basis, IWeight{0, 0, 0}, d.multiplicity(IWeight{0, 0, 0}));
    for (const auto& c : singlet.row(1, 1)) {
        std::printf("[%s] x [%s]  %+.6f\n", to_string(basis.pattern(c.q)).c_str(), to_string(basis.pattern(c.qp)).c_str(),
                    c.value);
    }
}
