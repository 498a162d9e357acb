// Prints S_0..S_m for a coprime pair alongside the gap list, e.g.
//   sylvester_table 3 5 4

#include <cstdlib>
#include <iostream>
#include <string>

#include "sylv/sylv.hpp"

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: sylvester_table A B M\n";
        return 2;
    }
    try {
        const auto pair = sylv::make_pair(sylv::BigInt(argv[1]), sylv::BigInt(argv[2]));
        const auto m = static_cast<unsigned>(std::stoul(argv[3]));

        std::cout << "g(" << pair.a() << "," << pair.b() << ") = " << sylv::frobenius(pair) << "\n";
        std::cout << "n(" << pair.a() << "," << pair.b() << ") = " << sylv::sylvester_number(pair) << "\n";

        const auto sums = sylv::sylvester_sums_recursive(pair, m);
        for (unsigned k = 0; k <= m; ++k) std::cout << "S_" << k << " = " << sums.values[k] << "\n";

        if (pair.ab() <= 10'000) {
            const auto gaps = sylv::enumerate_gaps_chi(pair);
            std::cout << "gaps:";
            for (auto v : gaps.elements) std::cout << " " << v;
            std::cout << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
