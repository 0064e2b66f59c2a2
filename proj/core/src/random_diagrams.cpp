#include "quadcross/random_diagrams.hpp"

#include "quadcross/errors.hpp"

#include <algorithm>
#include <numeric>

namespace quadcross {

bool planar_connected_quad_pairing(const std::vector<int>& mate, int q) {
    const int n = 8 * q;
    // Faces: orbits of h -> rotate(mate[h]).
    std::vector<char> seen(n, 0);
    int faces = 0;
    for (int d = 0; d < n; ++d) {
        if (seen[d]) continue;
        ++faces;
        int h = d;
        do {
            seen[h] = 1;
            const int m = mate[h];
            h = (m & ~7) | ((m + 1) & 7);
        } while (h != d);
    }
    if (q - 4 * q + faces != 2) return false; // V - E + F, E = 4q

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = n;
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[b] = a;
            --comps;
        }
    };
    for (int d = 0; d < n; ++d) {
        unite(d, mate[d]);
        unite(d, (d & ~7) | ((d + 1) & 7));
    }
    return comps == 1;
}

Diagram random_quad_diagram(int q, std::mt19937_64& rng) {
    if (q < 1) throw PreconditionError("random_quad_diagram needs q >= 1");
    const int n = 8 * q;
    std::vector<int> perm(n), mate(n);
    for (long attempt = 0; attempt < 50'000'000L; ++attempt) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < n; i += 2) {
            mate[perm[i]] = perm[i + 1];
            mate[perm[i + 1]] = perm[i];
        }
        if (!planar_connected_quad_pairing(mate, q)) continue;

        DiagramBuilder b;
        for (int c = 0; c < q; ++c) {
            std::array<int, 4> heights = {1, 2, 3, 4};
            std::shuffle(heights.begin(), heights.end(), rng);
            b.add_quad(heights);
        }
        for (int d = 0; d < n; ++d)
            if (d < mate[d]) b.connect(d / 8, d % 8, mate[d] / 8, mate[d] % 8);
        return b.build();
    }
    throw Error("random_quad_diagram: rejection sampling exhausted");
}

std::vector<Diagram> random_quad_corpus(int count, const std::vector<int>& q_values,
                                        uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Diagram> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(random_quad_diagram(q_values[i % q_values.size()], rng));
    return out;
}

} // namespace quadcross
