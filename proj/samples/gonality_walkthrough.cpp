// Walks a degree-20 genus-48 curve on a quintic through the library: its
// minimal link, the Picard lattice it spans, and the destabilizing classes
// that pin the gonality at 13.

#include <iostream>

#include <acmgon/acmgon.hpp>

int main() {
    using namespace acm;
    const HVector h = HVector::parse({1, 2, 3, 4, 5, 3, 2});
    const CurveInvariants inv = invariants(h);
    std::cout << "d=" << inv.d << " g=" << inv.g << " s=" << inv.s << " e=" << inv.e.value() << '\n';

    const PicardModel m = picard_model(h);
    std::cout << "minimal link {" << format_hvector(m.linked) << "} of type " << format_lambda(m.lambda_gamma) << '\n';
    for (std::size_t i = 0; i < m.rank(); ++i)
        std::cout << "  D_" << i + 1 << ' ' << format_lambda(m.components[i].lambda) << " degree "
                  << m.components[i].degree << " phi " << m.components[i].q << '\n';

    const SecantCase sc = multisecant_case(h);
    std::cout << "case " << secant_tag_name(sc.tag) << ", C.L = " << secant_degree(m, sc) << '\n';

    for (Int k : {13, 12}) {
        const auto cands = destabilizer_search(m, k);
        std::cout << "k=" << k << ": " << cands.size() << " destabilizing class(es)\n";
        for (const auto& c : cands)
            std::cout << "  A = " << c.cls.c << "H + (" << join_ints(c.cls.a) << ").D, x = " << c.cls.x << ", "
                      << destabilizer_kind_name(c.kind) << '\n';
    }

    const GonalityReport rep = predict_gonality(h);
    std::cout << "gonality " << *rep.gonality << ", Clifford index " << *rep.clifford << '\n';
    return rep.gonality == 13 ? 0 : 1;
}
