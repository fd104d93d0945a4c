// Walks the S_3 Cayley graph: fundamental zero-magic cycles, commutator
// certificates for one of them, and the translation of a cycle labeling
// into a relation among the quadric generators for n = 3.

#include <iostream>

#include "apolar/apolar.hpp"

int main() {
    using namespace apolar;

    auto g = build_graph(3);
    std::cout << "S_3: " << g.vertex_count << " vertices, " << g.edge_count()
              << " edges, circuit rank " << g.circuit_rank() << "\n\n";

    auto basis = zero_magic_basis(g);
    for (std::size_t c = 0; c < basis.size(); ++c) {
        std::cout << "cycle " << (c + 1) << ": start "
                  << permutation_to_string(basis[c].cycle.start) << ", word "
                  << basis[c].cycle.to_string() << "\n";
    }
    std::cout << "\n";

    auto reduction = commutator_reduce(basis.front().cycle);
    std::cout << "commutator certificates for cycle 1:\n";
    for (const auto& cert : reduction.certificates) {
        std::cout << "  " << cert.to_string() << "\n";
    }
    std::cout << "\n";

    RationalField qq;
    int n = 3;
    Multidegree mu(std::vector<int>{1, 1, 1}, std::vector<int>{1, 1, 1});
    auto rel = labeling_to_relation(qq, PolyKind::Det, n, mu,
                                    basis.front().labeling);
    GeneratorSet gens(n);
    std::cout << "as a relation: " << rel.to_string(gens) << "\n\n";
    std::cout << render_dots_and_boxes(rel, gens);
    return 0;
}
