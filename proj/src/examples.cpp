#include "whq/examples.hpp"

#include <array>

namespace whq {

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

std::vector<std::vector<int>> symmetric3_table() {
    // permutations of {0,1,2}: e, (01), (02), (12), (012), (021)
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1},
    }};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> ab{};
            for (int x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
            t[a][b] = index_of(ab);
        }
    return t;
}

std::vector<std::vector<int>> steiner_fano_table() {
    const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                             {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8, -1));
    for (int x = 0; x < 8; ++x) {
        t[0][x] = x;
        t[x][0] = x;
        t[x][x] = 0;
    }
    for (const auto& l : lines) {
        t[l[0]][l[1]] = l[2];
        t[l[1]][l[0]] = l[2];
        t[l[0]][l[2]] = l[1];
        t[l[2]][l[0]] = l[1];
        t[l[1]][l[2]] = l[0];
        t[l[2]][l[1]] = l[0];
    }
    return t;
}

GroupoidData pair_groupoid_data() {
    // arrows e_ij : j -> i on two objects, e_ij o e_jk = e_ik
    GroupoidData g;
    g.objects = 2;
    auto arrow = [](int i, int j) { return 2 * i + j; };
    g.source = {0, 1, 0, 1};
    g.target = {0, 0, 1, 1};
    g.labels = {"e11", "e12", "e21", "e22"};
    g.composition.assign(4, std::vector<int>(4, -1));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                g.composition[arrow(i, j)][arrow(j, k)] = arrow(i, k);
    return g;
}

WeakStructure example_trivial(const FieldSpec& f) { return trivial_structure(f); }

WeakStructure example_z2(const FieldSpec& f) {
    return group_algebra(cyclic_table(2), f, {"e", "g"});
}

WeakStructure example_z3(const FieldSpec& f) {
    return group_algebra(cyclic_table(3), f, {"e", "g", "g2"});
}

WeakStructure example_s3(const FieldSpec& f) {
    return group_algebra(symmetric3_table(), f,
                         {"e", "s01", "s02", "s12", "c012", "c021"});
}

WeakStructure example_pair_groupoid(const FieldSpec& f) {
    return groupoid_algebra(pair_groupoid_data(), f);
}

WeakStructure example_steiner_fano(const FieldSpec& f) {
    return loop_algebra(steiner_fano_table(), f,
                        {"e", "p1", "p2", "p3", "p4", "p5", "p6", "p7"});
}

std::vector<NamedExample> bundled_examples(const FieldSpec& f) {
    return {
        {"trivial", example_trivial(f)},
        {"z2", example_z2(f)},
        {"z3", example_z3(f)},
        {"s3", example_s3(f)},
        {"groupoid-pair", example_pair_groupoid(f)},
        {"steiner-fano", example_steiner_fano(f)},
    };
}

} // namespace whq
