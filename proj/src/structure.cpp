#include "whq/structure.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace whq {

// --- premises --------------------------------------------------------------

PremiseReport validate_premises(const WeakStructure& S) {
    const Mor I = S.id(1);
    const Mor& mu = S.mu;
    const Mor& eta = S.eta;
    const Mor& eps = S.eps;
    const Mor& delta = S.delta;

    const Mor epsmu = compose(eps, mu);        // 2 -> 0
    const Mor dm = compose(delta, eta);        // 0 -> 2
    const Mor c_delta = swap_then(delta, 1);   // c o delta
    const Mor mu_c = then_swap(mu, 1);         // mu o c

    // ((eps mu) (x) (eps mu)) o (H (x) dl (x) H), contracted pairwise so the
    // arity-4 object never materializes
    auto eps_split = [&](const Mor& dl) {
        Mor inner = compose(tensor(epsmu, I), tensor(I, dl)); // 2 -> 1
        return compose(epsmu, tensor(inner, I));              // 3 -> 0
    };
    // (H (x) ml (x) H) o (dm (x) dm), same contraction
    auto unit_split = [&](const Mor& ml) {
        Mor inner = compose(tensor(I, ml), tensor(dm, I));    // 1 -> 2
        return compose(tensor(inner, I), dm);                 // 0 -> 3
    };

    const Mor assoc_l = compose(mu, tensor(mu, I));
    const Mor assoc_r = compose(mu, tensor(I, mu));
    const Mor coassoc_l = compose(tensor(delta, I), delta);
    const Mor coassoc_r = compose(tensor(I, delta), delta);
    const Mor eps_assoc_l = compose(eps, assoc_l);
    const Mor eps_assoc_r = compose(eps, assoc_r);
    const Mor unit_l = compose(coassoc_l, eta); // (delta (x) H) o delta o eta
    const Mor unit_r = compose(coassoc_r, eta);

    const Mor compat_lhs = compose(delta, mu);
    const Mor compat_rhs =
        compose(tensor(mu, mu), swap_then(tensor(delta, delta), 2));

    const bool quasi = S.mode == Mode::Quasigroup;
    const char* one = quasi ? "a1" : "b1";

    std::vector<NamedCheck> checks;
    checks.push_back({"unit-left", [&] { return mor_equal(compose(mu, tensor(eta, I)), I); }});
    checks.push_back({"unit-right", [&] { return mor_equal(compose(mu, tensor(I, eta)), I); }});
    checks.push_back({"counit-left", [&] { return mor_equal(compose(tensor(eps, I), delta), I); }});
    checks.push_back({"counit-right", [&] { return mor_equal(compose(tensor(I, eps), delta), I); }});
    if (quasi)
        checks.push_back({"coassociativity", [&] { return mor_equal(coassoc_l, coassoc_r); }});
    else
        checks.push_back({"associativity", [&] { return mor_equal(assoc_l, assoc_r); }});
    checks.push_back({one, [&] { return mor_equal(compat_lhs, compat_rhs); }});
    if (quasi) {
        checks.push_back({"a2-associativity-of-eps",
                          [&] { return mor_equal(eps_assoc_l, eps_assoc_r); }});
        checks.push_back({"a2-split", [&] { return mor_equal(eps_assoc_l, eps_split(delta)); }});
        checks.push_back({"a2-split-inverse-braiding",
                          [&] { return mor_equal(eps_assoc_l, eps_split(c_delta)); }});
        checks.push_back({"a3-unit", [&] { return mor_equal(unit_l, unit_split(mu)); }});
        checks.push_back({"a3-unit-inverse-braiding",
                          [&] { return mor_equal(unit_l, unit_split(mu_c)); }});
    } else {
        checks.push_back({"b2-split", [&] { return mor_equal(eps_assoc_l, eps_split(delta)); }});
        checks.push_back({"b2-split-inverse-braiding",
                          [&] { return mor_equal(eps_assoc_l, eps_split(c_delta)); }});
        checks.push_back({"b3-counit-of-unit", [&] { return mor_equal(unit_l, unit_r); }});
        checks.push_back({"b3-unit", [&] { return mor_equal(unit_l, unit_split(mu)); }});
        checks.push_back({"b3-unit-inverse-braiding",
                          [&] { return mor_equal(unit_l, unit_split(mu_c)); }});
    }

    PremiseReport r;
    r.lines = run_checks(checks);
    r.pass = all_hold(r.lines);
    r.note = "symmetric base: the braiding is the swap and equals its inverse";
    return r;
}

Mor convolve(const WeakStructure& S, const Mor& f, const Mor& g) {
    if (f.src != 1 || f.dst != 1 || g.src != 1 || g.dst != 1)
        throw ArityMismatch("convolution requires endomorphisms of H");
    return chain({S.mu, tensor(f, g), S.delta});
}

// --- builders --------------------------------------------------------------

namespace {

void check_table(const std::vector<std::vector<int>>& t, const char* what) {
    int n = static_cast<int>(t.size());
    if (n == 0) throw Error(std::string(what) + ": empty table");
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n)
            throw Error(std::string(what) + ": table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw Error(std::string(what) + ": entry out of range");
    }
}

int find_identity(const std::vector<std::vector<int>>& t) {
    int n = static_cast<int>(t.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = t[e][x] == x && t[x][e] == x;
        if (ok) return e;
    }
    return -1;
}

WeakStructure from_table(const std::vector<std::vector<int>>& t, int e,
                         const std::vector<int>& inv, const FieldSpec& f,
                         const std::vector<std::string>& labels) {
    int d = static_cast<int>(t.size());
    WeakStructure S;
    S.dim = d;
    S.field = f;
    S.mode = Mode::Quasigroup;
    S.basis = labels;
    Scalar one = Scalar::one(f);

    Matrix etam(d, 1, f);
    etam(e, 0) = one;
    S.eta = Mor(d, 0, 1, std::move(etam));

    Matrix epsm(1, d, f);
    for (int i = 0; i < d; ++i) epsm(0, i) = one;
    S.eps = Mor(d, 1, 0, std::move(epsm));

    Matrix mum(d, d * d, f);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) mum(t[a][b], a * d + b) = one;
    S.mu = Mor(d, 2, 1, std::move(mum));

    Matrix dem(d * d, d, f);
    for (int a = 0; a < d; ++a) dem(a * d + a, a) = one;
    S.delta = Mor(d, 1, 2, std::move(dem));

    Matrix lam(d, d, f);
    for (int a = 0; a < d; ++a) lam(inv[a], a) = one;
    S.lambda = Mor(d, 1, 1, std::move(lam));
    return S;
}

} // namespace

WeakStructure group_algebra(const std::vector<std::vector<int>>& table, const FieldSpec& f,
                            const std::vector<std::string>& labels) {
    int n = static_cast<int>(table.size());
    try {
        check_table(table, "group");
    } catch (const Error& e) {
        throw NotAGroup(e.what());
    }
    int e = find_identity(table);
    if (e < 0) throw NotAGroup("no two-sided identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw NotAGroup("associativity fails");
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == e && table[b][a] == e) { inv[a] = b; break; }
        if (inv[a] < 0) throw NotAGroup("element without inverse");
    }
    return from_table(table, e, inv, f, labels);
}

WeakStructure loop_algebra(const std::vector<std::vector<int>>& latin, const FieldSpec& f,
                           const std::vector<std::string>& labels) {
    int n = static_cast<int>(latin.size());
    try {
        check_table(latin, "loop");
    } catch (const Error& e) {
        throw NotIPLoop(e.what());
    }
    for (int a = 0; a < n; ++a) {
        std::set<int> row(latin[a].begin(), latin[a].end());
        if (static_cast<int>(row.size()) != n) throw NotIPLoop("row is not a permutation");
        std::set<int> col;
        for (int b = 0; b < n; ++b) col.insert(latin[b][a]);
        if (static_cast<int>(col.size()) != n) throw NotIPLoop("column is not a permutation");
    }
    int e = find_identity(latin);
    if (e < 0) throw NotIPLoop("no two-sided identity");
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (latin[a][b] == e) { inv[a] = b; break; }
        if (latin[inv[a]][a] != e) throw NotIPLoop("inverse is one-sided");
        for (int y = 0; y < n; ++y) {
            if (latin[inv[a]][latin[a][y]] != y)
                throw NotIPLoop("left inverse property fails");
            if (latin[latin[y][a]][inv[a]] != y)
                throw NotIPLoop("right inverse property fails");
        }
    }
    return from_table(latin, e, inv, f, labels);
}

WeakStructure groupoid_algebra(const GroupoidData& g, const FieldSpec& f) {
    int m = static_cast<int>(g.source.size());
    if (m == 0 || static_cast<int>(g.target.size()) != m ||
        static_cast<int>(g.composition.size()) != m)
        throw NotAGroupoid("inconsistent arrow data");
    for (int a = 0; a < m; ++a) {
        if (g.source[a] < 0 || g.source[a] >= g.objects || g.target[a] < 0 ||
            g.target[a] >= g.objects)
            throw NotAGroupoid("arrow endpoint out of range");
        if (static_cast<int>(g.composition[a].size()) != m)
            throw NotAGroupoid("composition table is not square");
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int c = g.composition[a][b];
            bool composable = g.source[a] == g.target[b];
            if (composable != (c >= 0))
                throw NotAGroupoid("composition defined exactly for composable pairs");
            if (c >= 0) {
                if (c >= m) throw NotAGroupoid("composite out of range");
                if (g.source[c] != g.source[b] || g.target[c] != g.target[a])
                    throw NotAGroupoid("composite has wrong endpoints");
            }
        }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (g.composition[a][b] < 0) continue;
            for (int c = 0; c < m; ++c) {
                if (g.composition[b][c] < 0) continue;
                if (g.composition[g.composition[a][b]][c] !=
                    g.composition[a][g.composition[b][c]])
                    throw NotAGroupoid("associativity fails");
            }
        }
    std::vector<int> unit(g.objects, -1);
    for (int x = 0; x < g.objects; ++x) {
        for (int a = 0; a < m; ++a) {
            if (g.source[a] != x || g.target[a] != x) continue;
            bool ok = true;
            for (int b = 0; b < m && ok; ++b) {
                if (g.target[b] == x && g.composition[a][b] != b) ok = false;
                if (g.source[b] == x && g.composition[b][a] != b) ok = false;
            }
            if (ok) { unit[x] = a; break; }
        }
        if (unit[x] < 0) throw NotAGroupoid("object without identity arrow");
    }
    std::vector<int> inv(m, -1);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (g.source[b] != g.target[a] || g.target[b] != g.source[a]) continue;
            if (g.composition[a][b] == unit[g.target[a]] &&
                g.composition[b][a] == unit[g.source[a]]) {
                inv[a] = b;
                break;
            }
        }
        if (inv[a] < 0) throw NotAGroupoid("arrow without inverse");
    }

    int d = m;
    WeakStructure S;
    S.dim = d;
    S.field = f;
    S.mode = Mode::Quasigroup;
    S.basis = g.labels;
    Scalar one = Scalar::one(f);

    Matrix etam(d, 1, f);
    for (int x = 0; x < g.objects; ++x) etam(unit[x], 0) = one;
    S.eta = Mor(d, 0, 1, std::move(etam));

    Matrix epsm(1, d, f);
    for (int i = 0; i < d; ++i) epsm(0, i) = one;
    S.eps = Mor(d, 1, 0, std::move(epsm));

    Matrix mum(d, d * d, f);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (g.composition[a][b] >= 0) mum(g.composition[a][b], a * d + b) = one;
    S.mu = Mor(d, 2, 1, std::move(mum));

    Matrix dem(d * d, d, f);
    for (int a = 0; a < d; ++a) dem(a * d + a, a) = one;
    S.delta = Mor(d, 1, 2, std::move(dem));

    Matrix lam(d, d, f);
    for (int a = 0; a < d; ++a) lam(inv[a], a) = one;
    S.lambda = Mor(d, 1, 1, std::move(lam));
    return S;
}

WeakStructure trivial_structure(const FieldSpec& f) {
    WeakStructure S;
    S.dim = 1;
    S.field = f;
    S.mode = Mode::Quasigroup;
    Matrix one(1, 1, f);
    one(0, 0) = Scalar::one(f);
    S.eta = Mor(1, 0, 1, one);
    S.eps = Mor(1, 1, 0, one);
    S.mu = Mor(1, 2, 1, one);
    S.delta = Mor(1, 1, 2, one);
    S.lambda = Mor(1, 1, 1, one);
    return S;
}

// --- transforms ------------------------------------------------------------

WeakStructure dualize(const WeakStructure& S) {
    WeakStructure D;
    D.dim = S.dim;
    D.field = S.field;
    D.mode = S.mode == Mode::Quasigroup ? Mode::Coquasigroup : Mode::Quasigroup;
    D.basis = S.basis;
    D.mu = Mor(S.dim, 2, 1, S.delta.m.transpose());
    D.delta = Mor(S.dim, 1, 2, S.mu.m.transpose());
    D.eta = Mor(S.dim, 0, 1, S.eps.m.transpose());
    D.eps = Mor(S.dim, 1, 0, S.eta.m.transpose());
    if (S.lambda) D.lambda = Mor(S.dim, 1, 1, S.lambda->m.transpose());
    return D;
}

WeakStructure strip_lambda(const WeakStructure& S) {
    WeakStructure T = S;
    T.lambda.reset();
    return T;
}

WeakStructure perturb(const WeakStructure& S, PerturbTarget target, std::uint64_t seed) {
    WeakStructure T = S;
    Mor* mor = nullptr;
    switch (target) {
        case PerturbTarget::Mult: mor = &T.mu; break;
        case PerturbTarget::Comult: mor = &T.delta; break;
        case PerturbTarget::Unit: mor = &T.eta; break;
        case PerturbTarget::Counit: mor = &T.eps; break;
    }
    Matrix& m = mor->m;
    std::size_t size = std::size_t(m.rows()) * m.cols();
    std::mt19937_64 rng(seed);
    std::size_t start = rng() % size;
    Scalar one = Scalar::one(S.field);
    for (std::size_t k = 0; k < size; ++k) {
        std::size_t t = (start + k) % size;
        int i = static_cast<int>(t / m.cols());
        int j = static_cast<int>(t % m.cols());
        Scalar flipped = one - m(i, j);
        if (flipped != m(i, j)) {
            m(i, j) = flipped;
            return T;
        }
    }
    throw Error("perturb: every entry is a fixed point of v -> 1-v");
}

// --- serialization ---------------------------------------------------------

namespace {

nlohmann::ordered_json field_json(const FieldSpec& f) {
    nlohmann::ordered_json j;
    if (f.kind == FieldKind::Rational) {
        j["kind"] = "rational";
    } else {
        j["kind"] = "prime";
        j["p"] = f.p;
    }
    return j;
}

FieldSpec field_from_json(const nlohmann::json& j) {
    FieldSpec f;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") {
        f.kind = FieldKind::Rational;
    } else if (kind == "prime") {
        f.kind = FieldKind::Prime;
        f.p = j.at("p").get<std::uint64_t>();
        if (f.p < 2) throw IOError("field modulus must be at least 2");
        mpz_class p(std::to_string(f.p));
        if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
            throw IOError("field modulus " + std::to_string(f.p) + " is not prime");
    } else {
        throw IOError("unknown field kind '" + kind + "'");
    }
    return f;
}

} // namespace

std::string save_structure(const WeakStructure& S) {
    const int d = S.dim;
    nlohmann::ordered_json j;
    j["field"] = field_json(S.field);
    j["dim"] = d;
    if (!S.basis.empty()) j["basis"] = S.basis;
    nlohmann::ordered_json unit = nlohmann::ordered_json::array();
    for (int i = 0; i < d; ++i) unit.push_back(S.eta.m(i, 0).str());
    j["unit"] = std::move(unit);
    nlohmann::ordered_json counit = nlohmann::ordered_json::array();
    for (int i = 0; i < d; ++i) counit.push_back(S.eps.m(0, i).str());
    j["counit"] = std::move(counit);

    nlohmann::ordered_json mult = nlohmann::ordered_json::array();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                const Scalar& v = S.mu.m(c, a * d + b);
                if (v.is_zero()) continue;
                nlohmann::ordered_json e;
                e["i"] = a;
                e["j"] = b;
                e["k"] = c;
                e["v"] = v.str();
                mult.push_back(std::move(e));
            }
    j["mult"] = std::move(mult);

    nlohmann::ordered_json comult = nlohmann::ordered_json::array();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                const Scalar& v = S.delta.m(a * d + b, c);
                if (v.is_zero()) continue;
                nlohmann::ordered_json e;
                e["i"] = a;
                e["j"] = b;
                e["k"] = c;
                e["v"] = v.str();
                comult.push_back(std::move(e));
            }
    j["comult"] = std::move(comult);

    if (S.lambda) {
        nlohmann::ordered_json anti = nlohmann::ordered_json::array();
        for (int i = 0; i < d; ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int k = 0; k < d; ++k) row.push_back(S.lambda->m(i, k).str());
            anti.push_back(std::move(row));
        }
        j["antipode"] = std::move(anti);
    }
    j["mode"] = S.mode == Mode::Quasigroup ? "quasigroup" : "coquasigroup";
    return j.dump(2) + "\n";
}

WeakStructure load_structure(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw IOError(std::string("bad json: ") + e.what());
    }
    try {
        WeakStructure S;
        S.field = field_from_json(j.at("field"));
        S.dim = j.at("dim").get<int>();
        if (S.dim < 1) throw IOError("dim must be positive");
        const int d = S.dim;
        if (j.contains("basis")) {
            S.basis = j["basis"].get<std::vector<std::string>>();
            if (static_cast<int>(S.basis.size()) != d)
                throw IOError("basis size does not match dim");
        }

        auto vec = j.at("unit").get<std::vector<std::string>>();
        if (static_cast<int>(vec.size()) != d) throw IOError("unit size does not match dim");
        Matrix etam(d, 1, S.field);
        for (int i = 0; i < d; ++i) etam(i, 0) = Scalar::parse(vec[i], S.field);
        S.eta = Mor(d, 0, 1, std::move(etam));

        vec = j.at("counit").get<std::vector<std::string>>();
        if (static_cast<int>(vec.size()) != d) throw IOError("counit size does not match dim");
        Matrix epsm(1, d, S.field);
        for (int i = 0; i < d; ++i) epsm(0, i) = Scalar::parse(vec[i], S.field);
        S.eps = Mor(d, 1, 0, std::move(epsm));

        auto read_entries = [&](const char* key, bool comult) {
            Matrix m(comult ? d * d : d, comult ? d : d * d, S.field);
            std::set<std::tuple<int, int, int>> seen;
            for (const auto& e : j.at(key)) {
                int a = e.at("i").get<int>();
                int b = e.at("j").get<int>();
                int c = e.at("k").get<int>();
                if (a < 0 || a >= d || b < 0 || b >= d || c < 0 || c >= d)
                    throw IOError(std::string(key) + " index out of range");
                if (!seen.insert({a, b, c}).second)
                    throw IOError(std::string("duplicate ") + key + " entry");
                Scalar v = Scalar::parse(e.at("v").get<std::string>(), S.field);
                if (comult)
                    m(a * d + b, c) = v;
                else
                    m(c, a * d + b) = v;
            }
            return m;
        };
        S.mu = Mor(d, 2, 1, read_entries("mult", false));
        S.delta = Mor(d, 1, 2, read_entries("comult", true));

        if (j.contains("antipode") && !j["antipode"].is_null()) {
            auto rows = j["antipode"].get<std::vector<std::vector<std::string>>>();
            if (static_cast<int>(rows.size()) != d) throw IOError("antipode shape");
            Matrix lam(d, d, S.field);
            for (int i = 0; i < d; ++i) {
                if (static_cast<int>(rows[i].size()) != d) throw IOError("antipode shape");
                for (int k = 0; k < d; ++k) lam(i, k) = Scalar::parse(rows[i][k], S.field);
            }
            S.lambda = Mor(d, 1, 1, std::move(lam));
        }

        std::string mode = j.at("mode").get<std::string>();
        if (mode == "quasigroup")
            S.mode = Mode::Quasigroup;
        else if (mode == "coquasigroup")
            S.mode = Mode::Coquasigroup;
        else
            throw IOError("unknown mode '" + mode + "'");
        return S;
    } catch (const nlohmann::json::exception& e) {
        throw IOError(std::string("bad structure file: ") + e.what());
    }
}

WeakStructure load_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_structure(ss.str());
}

void save_structure_file(const WeakStructure& S, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write " + path);
    out << save_structure(S);
}

} // namespace whq
