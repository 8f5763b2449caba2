// Prints the Frame number and the modular radical dimensions of a few small
// schemes, one line each.

#include <cellalg.hpp>

#include <iostream>

int main()
{
    using namespace cellalg;
    for (const char* spec : {"rank2:3", "thin-cyclic:4", "thin-sym:3", "johnson:5:2", "direct-sum(rank2:2,rank2:3)"}) {
        const CoherentConfiguration cc(build_scheme(spec));
        const auto fr = frame_number(cc, decompose(cc, 1));
        std::cout << spec << "  F=" << fr.frame << "  N=" << to_string(fr.frame_quotient) << "  rad:";
        for (std::uint64_t p : {2, 3, 5, 7})
            std::cout << " p" << p << "=" << radical_chain(ModularAlgebra(cc, p)).dimension;
        std::cout << '\n';
    }
}
