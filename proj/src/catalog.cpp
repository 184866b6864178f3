#include "ppbase/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ppbase/fpmat.hpp"
#include "ppbase/numeric.hpp"
#include "ppbase/perm.hpp"

namespace ppbase {

namespace {

using json = nlohmann::ordered_json;

// Table-backed arithmetic for F_{p^d}, elements encoded as base-p digit
// strings of their coefficient vectors over the deterministic (lexicographically
// least) irreducible modulus.
struct SmallField {
    unsigned p, d, q;
    FpPoly modulus;
    std::vector<unsigned> add_t, mul_t;

    SmallField(unsigned p_, unsigned d_) : p(p_), d(d_) {
        q = 1;
        for (unsigned i = 0; i < d; ++i) q *= p;
        modulus = least_irreducible(p, d);
        add_t.resize(std::size_t(q) * q);
        mul_t.resize(std::size_t(q) * q);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                add_t[std::size_t(a) * q + b] = encode(poly_add(decode(a), decode(b)));
                mul_t[std::size_t(a) * q + b] =
                    encode(poly_mod(poly_mul(decode(a), decode(b)), modulus));
            }
    }

    FpPoly decode(unsigned e) const {
        std::vector<unsigned> c;
        for (unsigned i = 0; i < d; ++i) {
            c.push_back(e % p);
            e /= p;
        }
        return poly_from(p, c);
    }
    unsigned encode(const FpPoly& f) const {
        unsigned e = 0, mult = 1;
        for (unsigned i = 0; i < d; ++i) {
            unsigned coef = i < f.c.size() ? f.c[i] : 0;
            e += coef * mult;
            mult *= p;
        }
        return e;
    }

    unsigned add(unsigned a, unsigned b) const { return add_t[std::size_t(a) * q + b]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_t[std::size_t(a) * q + b]; }
    unsigned neg(unsigned a) const {
        unsigned r = 0;
        for (unsigned i = 1; i < p; ++i) r = add(r, a);
        return r;  // (p-1) * a
    }
    unsigned inv(unsigned a) const {
        for (unsigned b = 1; b < q; ++b)
            if (mul(a, b) == 1) return b;
        throw Error("field inverse of zero");
    }
    std::uint64_t mult_order(unsigned a) const {
        unsigned acc = a;
        std::uint64_t ord = 1;
        while (acc != 1) {
            acc = mul(acc, a);
            ++ord;
        }
        return ord;
    }
    unsigned primitive_root() const {
        for (unsigned a = 2; a < q; ++a)
            if (mult_order(a) == q - 1) return a;
        throw Error("no primitive root (impossible)");
    }
    unsigned frobenius(unsigned a) const {
        unsigned r = a;
        for (unsigned i = 1; i < p; ++i) r = mul(r, a);
        return r;  // a^p
    }
};

PermGroup cyclic_group(unsigned n) {
    if (n == 0) throw Error("cyclic: n must be positive");
    if (n == 1) return PermGroup::trivial(1);
    std::vector<unsigned> im(n);
    for (unsigned i = 0; i < n; ++i) im[i] = (i + 1) % n;
    return PermGroup(n, {Permutation(std::move(im))});
}

PermGroup sym_group(unsigned n) {
    if (n <= 1) return PermGroup::trivial(std::max(1u, n));
    std::vector<Permutation> gens{parse_cycles("(1,2)", n)};
    if (n > 2) {
        std::vector<unsigned> im(n);
        for (unsigned i = 0; i < n; ++i) im[i] = (i + 1) % n;
        gens.push_back(Permutation(std::move(im)));
    }
    return PermGroup(n, std::move(gens));
}

PermGroup alt_group(unsigned n) {
    if (n <= 2) return PermGroup::trivial(std::max(1u, n));
    std::vector<Permutation> gens;
    for (unsigned i = 2; i + 1 <= n; ++i)
        gens.push_back(parse_cycles("(1," + std::to_string(i) + "," + std::to_string(i + 1) + ")", n));
    return PermGroup(n, std::move(gens));
}

PermGroup dihedral_group(unsigned n) {
    if (n < 3) throw Error("dihedral: n >= 3 required (use elem_abelian for Klein)");
    std::vector<unsigned> rot(n), refl(n);
    for (unsigned i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return PermGroup(n, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

PermGroup elem_abelian_group(unsigned p, unsigned k) {
    if (!is_prime(p)) throw Error("elem_abelian: p must be prime");
    if (k == 0) return PermGroup::trivial(1);
    unsigned degree = p * k;
    std::vector<Permutation> gens;
    for (unsigned j = 0; j < k; ++j) {
        std::vector<unsigned> im(degree);
        std::iota(im.begin(), im.end(), 0u);
        for (unsigned i = 0; i < p; ++i) im[j * p + i] = j * p + (i + 1) % p;
        gens.push_back(Permutation(std::move(im)));
    }
    return PermGroup(degree, std::move(gens));
}

// PSL2/PGL2/PGammaL2 on the projective line: points 0..q-1 are the field
// elements, point q is infinity.
std::vector<Permutation> psl2_generators(const SmallField& F) {
    unsigned q = F.q, degree = q + 1;
    std::vector<Permutation> gens;
    for (unsigned i = 0; i < F.d; ++i) {
        unsigned basis = F.encode(poly_x_power(F.p, i));
        std::vector<unsigned> im(degree);
        for (unsigned z = 0; z < q; ++z) im[z] = F.add(z, basis);
        im[q] = q;
        gens.push_back(Permutation(std::move(im)));
    }
    std::vector<unsigned> inv(degree);
    inv[0] = q;
    inv[q] = 0;
    for (unsigned z = 1; z < q; ++z) inv[z] = F.neg(F.inv(z));
    gens.push_back(Permutation(std::move(inv)));
    return gens;
}

PermGroup psl2_group(unsigned q_param) {
    auto fac = factorize(q_param);
    if (fac.size() != 1 || q_param < 4) throw Error("psl2: q must be a prime power >= 4");
    SmallField F(static_cast<unsigned>(fac[0].first), fac[0].second);
    return PermGroup(F.q + 1, psl2_generators(F));
}

PermGroup pgl2_group(unsigned q_param) {
    auto fac = factorize(q_param);
    if (fac.size() != 1 || q_param < 4) throw Error("pgl2: q must be a prime power >= 4");
    SmallField F(static_cast<unsigned>(fac[0].first), fac[0].second);
    auto gens = psl2_generators(F);
    unsigned nu = F.primitive_root();
    std::vector<unsigned> scale(F.q + 1);
    for (unsigned z = 0; z < F.q; ++z) scale[z] = F.mul(nu, z);
    scale[F.q] = F.q;
    gens.push_back(Permutation(std::move(scale)));
    return PermGroup(F.q + 1, std::move(gens));
}

PermGroup pgammal2_9_group() {
    SmallField F(3, 2);
    auto gens = psl2_generators(F);
    unsigned nu = F.primitive_root();
    std::vector<unsigned> scale(F.q + 1);
    for (unsigned z = 0; z < F.q; ++z) scale[z] = F.mul(nu, z);
    scale[F.q] = F.q;
    gens.push_back(Permutation(std::move(scale)));
    std::vector<unsigned> frob(F.q + 1);
    for (unsigned z = 0; z < F.q; ++z) frob[z] = F.frobenius(z);
    frob[F.q] = F.q;
    gens.push_back(Permutation(std::move(frob)));
    return PermGroup(F.q + 1, std::move(gens));
}

// P x| Q acting on the points of P = (F_{p^d})^m: translations plus
// multiplication by a scalar of multiplicative order q_ord. The module is a
// direct sum of m isomorphic simple summands by construction.
PermGroup scalar_ext_group(unsigned p, unsigned d, unsigned m, std::uint64_t q_ord) {
    if (!is_prime(p)) throw Error("scalar_ext: p must be prime");
    if (d == 0 || m == 0) throw Error("scalar_ext: d and m must be positive");
    if (!is_prime_power(q_ord)) throw Error("scalar_ext: the acting order must be a prime power");
    auto qfac = factorize(q_ord);
    if (qfac[0].first == p) throw Error("scalar_ext: acting prime must differ from p");
    SmallField F(p, d);
    if ((F.q - 1) % q_ord != 0)
        throw Error("scalar_ext: no element of that order in the multiplicative group");
    unsigned lambda = 0;
    for (unsigned a = 2; a < F.q; ++a)
        if (F.mult_order(a) == q_ord) {
            lambda = a;
            break;
        }
    if (lambda == 0) throw Error("scalar_ext: no scalar of the requested order");

    std::uint64_t npoints = 1;
    for (unsigned j = 0; j < m; ++j) npoints *= F.q;
    if (npoints > 100000) throw Error("scalar_ext: point count too large");
    unsigned N = static_cast<unsigned>(npoints);

    auto coord = [&](unsigned v, unsigned j) { return v / static_cast<unsigned>(pow_u64(F.q, j)) % F.q; };
    auto with_coord = [&](unsigned v, unsigned j, unsigned c) {
        unsigned base = static_cast<unsigned>(pow_u64(F.q, j));
        return v - coord(v, j) * base + c * base;
    };

    std::vector<Permutation> gens;
    for (unsigned j = 0; j < m; ++j)
        for (unsigned i = 0; i < d; ++i) {
            unsigned basis = F.encode(poly_x_power(p, i));
            std::vector<unsigned> im(N);
            for (unsigned v = 0; v < N; ++v) im[v] = with_coord(v, j, F.add(coord(v, j), basis));
            gens.push_back(Permutation(std::move(im)));
        }
    std::vector<unsigned> im(N);
    for (unsigned v = 0; v < N; ++v) {
        unsigned w = v;
        for (unsigned j = 0; j < m; ++j) w = with_coord(w, j, F.mul(lambda, coord(w, j)));
        im[v] = w;
    }
    gens.push_back(Permutation(std::move(im)));
    return PermGroup(N, std::move(gens));
}

// P x| C_n with P = (F_p)^d and the cycle generator acting by the given
// matrix (its order must divide n; a proper divisor leaves a kernel). The
// C_n part also permutes n extra points regularly to keep the action
// faithful.
PermGroup semidirect_group(unsigned p, const std::vector<std::vector<unsigned>>& rows, unsigned n) {
    if (!is_prime(p)) throw Error("semidirect: p must be prime");
    unsigned d = static_cast<unsigned>(rows.size());
    FpMatrix M{p, d, {}};
    M.a.resize(std::size_t(d) * d);
    for (unsigned i = 0; i < d; ++i) {
        if (rows[i].size() != d) throw Error("semidirect: matrix must be square");
        for (unsigned j = 0; j < d; ++j) M.at(i, j) = rows[i][j] % p;
    }
    if (!mat_invertible(M)) throw Error("semidirect: matrix must be invertible mod p");
    if (n == 0) throw Error("semidirect: n must be positive");
    {
        FpMatrix acc = FpMatrix::identity(p, d);
        for (unsigned i = 0; i < n; ++i) acc = mat_mul(acc, M);
        if (!(acc == FpMatrix::identity(p, d))) throw Error("semidirect: matrix order must divide n");
    }
    unsigned pd = static_cast<unsigned>(pow_u64(p, d));
    unsigned degree = pd + n;

    auto coord = [&](unsigned v, unsigned i) { return v / static_cast<unsigned>(pow_u64(p, i)) % p; };
    std::vector<Permutation> gens;
    for (unsigned i = 0; i < d; ++i) {
        std::vector<unsigned> im(degree);
        std::iota(im.begin(), im.end(), 0u);
        unsigned base = static_cast<unsigned>(pow_u64(p, i));
        for (unsigned v = 0; v < pd; ++v)
            im[v] = v - coord(v, i) * base + (coord(v, i) + 1) % p * base;
        gens.push_back(Permutation(std::move(im)));
    }
    std::vector<unsigned> im(degree);
    for (unsigned v = 0; v < pd; ++v) {
        std::vector<unsigned> vec(d);
        for (unsigned i = 0; i < d; ++i) vec[i] = coord(v, i);
        auto w = mat_vec(M, vec);
        unsigned enc = 0;
        for (unsigned i = 0; i < d; ++i) enc += w[i] * static_cast<unsigned>(pow_u64(p, i));
        im[v] = enc;
    }
    for (unsigned i = 0; i < n; ++i) im[pd + i] = pd + (i + 1) % n;
    gens.push_back(Permutation(std::move(im)));
    return PermGroup(degree, std::move(gens));
}

// SL(2,3) acting on the 8 nonzero vectors of (F_3)^2.
PermGroup sl2_3_group() {
    auto enc = [](unsigned x, unsigned y) { return 3 * x + y - 1; };  // skip (0,0)
    auto act = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
        std::vector<unsigned> im(8);
        for (unsigned x = 0; x < 3; ++x)
            for (unsigned y = 0; y < 3; ++y) {
                if (x == 0 && y == 0) continue;
                unsigned nx = (a * x + c * y) % 3, ny = (b * x + d * y) % 3;
                im[enc(x, y)] = enc(nx, ny);
            }
        return Permutation(std::move(im));
    };
    return PermGroup(8, {act(1, 1, 0, 1), act(0, 2, 1, 0)});
}

}  // namespace

PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
    unsigned d = A.degree() + B.degree();
    std::vector<Permutation> gens;
    for (const auto& g : A.generators()) {
        std::vector<unsigned> im(d);
        for (unsigned i = 0; i < A.degree(); ++i) im[i] = g(i);
        for (unsigned i = A.degree(); i < d; ++i) im[i] = i;
        gens.push_back(Permutation(std::move(im)));
    }
    for (const auto& g : B.generators()) {
        std::vector<unsigned> im(d);
        for (unsigned i = 0; i < A.degree(); ++i) im[i] = i;
        for (unsigned i = 0; i < B.degree(); ++i) im[A.degree() + i] = A.degree() + g(i);
        gens.push_back(Permutation(std::move(im)));
    }
    return PermGroup(d, std::move(gens));
}

PermGroup wreath_sym(const PermGroup& H, unsigned n) {
    if (n < 1) throw Error("wreath_sym: n >= 1 required");
    unsigned dH = H.degree(), degree = dH * n;
    std::vector<Permutation> gens;
    for (const auto& g : H.generators()) {
        std::vector<unsigned> im(degree);
        std::iota(im.begin(), im.end(), 0u);
        for (unsigned i = 0; i < dH; ++i) im[i] = g(i);
        gens.push_back(Permutation(std::move(im)));
    }
    auto block_perm = [&](const Permutation& sigma) {
        std::vector<unsigned> im(degree);
        for (unsigned b = 0; b < n; ++b)
            for (unsigned i = 0; i < dH; ++i) im[b * dH + i] = sigma(b) * dH + i;
        return Permutation(std::move(im));
    };
    if (n >= 2) {
        gens.push_back(block_perm(parse_cycles("(1,2)", n)));
        if (n > 2) {
            std::vector<unsigned> rot(n);
            for (unsigned i = 0; i < n; ++i) rot[i] = (i + 1) % n;
            gens.push_back(block_perm(Permutation(std::move(rot))));
        }
    }
    return PermGroup(degree, std::move(gens));
}

PermGroup construct(const GroupSpec& s) {
    const auto& k = s.kind;
    auto parm = [&](std::size_t i) -> long long {
        if (i >= s.params.size()) throw Error("construct: missing parameter for kind " + k);
        return s.params[i];
    };
    if (k == "trivial") return PermGroup::trivial(1);
    if (k == "cyclic") return cyclic_group(static_cast<unsigned>(parm(0)));
    if (k == "elem_abelian")
        return elem_abelian_group(static_cast<unsigned>(parm(0)), static_cast<unsigned>(parm(1)));
    if (k == "dihedral") return dihedral_group(static_cast<unsigned>(parm(0)));
    if (k == "sym") return sym_group(static_cast<unsigned>(parm(0)));
    if (k == "alt") return alt_group(static_cast<unsigned>(parm(0)));
    if (k == "psl2") return psl2_group(static_cast<unsigned>(parm(0)));
    if (k == "pgl2") return pgl2_group(static_cast<unsigned>(parm(0)));
    if (k == "pgammal2_9") return pgammal2_9_group();
    if (k == "sl2_3") return sl2_3_group();
    if (k == "scalar_ext")
        return scalar_ext_group(static_cast<unsigned>(parm(0)), static_cast<unsigned>(parm(1)),
                                static_cast<unsigned>(parm(2)),
                                static_cast<std::uint64_t>(parm(3)));
    if (k == "semidirect")
        return semidirect_group(static_cast<unsigned>(parm(0)), s.matrix,
                                static_cast<unsigned>(parm(1)));
    if (k == "direct_product") {
        if (s.parts.size() < 2) throw Error("direct_product: at least two parts");
        PermGroup G = construct(s.parts[0]);
        for (std::size_t i = 1; i < s.parts.size(); ++i) G = direct_product(G, construct(s.parts[i]));
        return G;
    }
    if (k == "wreath_sym") {
        if (s.parts.size() != 1) throw Error("wreath_sym: exactly one base part");
        return wreath_sym(construct(s.parts[0]), static_cast<unsigned>(parm(0)));
    }
    if (k == "raw") {
        std::vector<Permutation> gens;
        for (const auto& c : s.raw_gens) gens.push_back(parse_cycles(c, s.raw_degree));
        return PermGroup(s.raw_degree, std::move(gens));
    }
    throw Error("construct: unknown kind " + k);
}

std::uint64_t spec_order(const GroupSpec& s) {
    const auto& k = s.kind;
    auto fact = [](std::uint64_t n) {
        std::uint64_t f = 1;
        for (std::uint64_t i = 2; i <= n; ++i) f *= i;
        return f;
    };
    auto parm = [&](std::size_t i) { return static_cast<std::uint64_t>(s.params[i]); };
    if (k == "trivial") return 1;
    if (k == "cyclic") return parm(0);
    if (k == "elem_abelian") return pow_u64(parm(0), static_cast<unsigned>(parm(1)));
    if (k == "dihedral") return 2 * parm(0);
    if (k == "sym") return fact(parm(0));
    if (k == "alt") return parm(0) <= 2 ? 1 : fact(parm(0)) / 2;
    if (k == "psl2") {
        std::uint64_t q = parm(0);
        return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
    }
    if (k == "pgl2") {
        std::uint64_t q = parm(0);
        return q * (q * q - 1);
    }
    if (k == "pgammal2_9") return 1440;
    if (k == "sl2_3") return 24;
    if (k == "scalar_ext")
        return pow_u64(parm(0), static_cast<unsigned>(parm(1) * parm(2))) * parm(3);
    if (k == "semidirect")
        return pow_u64(parm(0), static_cast<unsigned>(s.matrix.size())) * parm(1);
    if (k == "direct_product") {
        std::uint64_t o = 1;
        for (const auto& part : s.parts) o = checked_mul(o, spec_order(part));
        return o;
    }
    if (k == "wreath_sym") {
        std::uint64_t o = 1, n = parm(0);
        for (std::uint64_t i = 0; i < n; ++i) o = checked_mul(o, spec_order(s.parts[0]));
        return checked_mul(o, fact(n));
    }
    if (k == "raw") return parm(0);  // declared order carried in the spec
    throw Error("spec_order: unknown kind " + k);
}

NamedGroup load_group(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("group file is not valid JSON: " + std::string(e.what()), e.byte);
    }
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
        throw Error("group file missing schema_version");
    if (j["schema_version"].get<int>() != kGroupFileSchemaVersion)
        throw Error("unsupported group file schema version");
    if (!j.contains("degree") || !j["degree"].is_number_unsigned())
        throw Error("group file missing degree");
    unsigned degree = j["degree"].get<unsigned>();
    NamedGroup out;
    out.name = j.value("name", std::string("unnamed"));
    std::vector<Permutation> gens;
    for (const auto& c : j.at("generators")) gens.push_back(parse_cycles(c.get<std::string>(), degree));
    out.group = PermGroup(degree, std::move(gens));
    return out;
}

void save_group(const PermGroup& G, const std::string& name, const std::string& path) {
    json j;
    j["schema_version"] = kGroupFileSchemaVersion;
    j["name"] = name;
    j["degree"] = G.degree();
    json gens = json::array();
    for (const auto& g : G.generators()) gens.push_back(format_cycles(g));
    j["generators"] = gens;
    std::ofstream out(path);
    if (!out) throw Error("cannot write group file: " + path);
    out << j.dump(2) << "\n";
}

namespace {

GroupSpec simple(std::string name, std::string kind, std::vector<long long> params = {}) {
    GroupSpec s;
    s.name = std::move(name);
    s.kind = std::move(kind);
    s.params = std::move(params);
    return s;
}

GroupSpec prod(std::string name, std::vector<GroupSpec> parts) {
    GroupSpec s;
    s.name = std::move(name);
    s.kind = "direct_product";
    s.parts = std::move(parts);
    return s;
}

std::vector<GroupSpec> build_catalog() {
    std::vector<GroupSpec> v;
    v.push_back(simple("c1", "trivial"));
    for (unsigned n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15})
        v.push_back(simple("c" + std::to_string(n), "cyclic", {n}));
    v.push_back(simple("ea2_2", "elem_abelian", {2, 2}));
    v.push_back(simple("ea2_3", "elem_abelian", {2, 3}));
    v.push_back(simple("ea2_4", "elem_abelian", {2, 4}));
    v.push_back(simple("ea3_2", "elem_abelian", {3, 2}));
    v.push_back(simple("ea5_2", "elem_abelian", {5, 2}));
    for (unsigned n : {4, 5, 6, 7}) v.push_back(simple("d" + std::to_string(n), "dihedral", {n}));
    {
        GroupSpec q8;
        q8.name = "q8";
        q8.kind = "raw";
        q8.params = {8};
        q8.raw_degree = 8;
        q8.raw_gens = {"(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)"};
        v.push_back(q8);
    }
    v.push_back(simple("sl2_3", "sl2_3"));
    for (unsigned n : {3, 4, 5, 6, 7}) v.push_back(simple("sym" + std::to_string(n), "sym", {n}));
    for (unsigned n : {4, 5}) v.push_back(simple("alt" + std::to_string(n), "alt", {n}));
    v.push_back(simple("psl2_7", "psl2", {7}));
    v.push_back(simple("psl2_8", "psl2", {8}));
    v.push_back(simple("psl2_9", "psl2", {9}));
    v.push_back(simple("pgl2_5", "pgl2", {5}));
    v.push_back(simple("pgl2_7", "pgl2", {7}));
    v.push_back(simple("pgl2_9", "pgl2", {9}));
    v.push_back(simple("pgammal2_9", "pgammal2_9"));
    v.push_back(simple("f20", "scalar_ext", {5, 1, 1, 4}));
    v.push_back(simple("f21", "scalar_ext", {7, 1, 1, 3}));
    v.push_back(simple("aff8_7", "scalar_ext", {2, 3, 1, 7}));
    v.push_back(simple("se36", "scalar_ext", {3, 2, 1, 4}));
    v.push_back(simple("se75", "scalar_ext", {5, 2, 1, 3}));
    v.push_back(simple("se80", "scalar_ext", {2, 4, 1, 5}));
    v.push_back(simple("se147", "scalar_ext", {7, 1, 2, 3}));
    {
        GroupSpec s = simple("c5_c4", "semidirect", {5, 4});
        s.matrix = {{4}};  // inversion, acting order 2: the C4 acts with kernel C2
        v.push_back(s);
        GroupSpec t = simple("c3_c4", "semidirect", {3, 4});
        t.matrix = {{2}};
        v.push_back(t);
    }
    v.push_back(prod("c2xsym3", {simple("", "cyclic", {2}), simple("", "sym", {3})}));
    v.push_back(prod("sym3xc3", {simple("", "sym", {3}), simple("", "cyclic", {3})}));
    v.push_back(prod("sym3xc5", {simple("", "sym", {3}), simple("", "cyclic", {5})}));
    v.push_back(prod("f21xc2", {simple("", "scalar_ext", {7, 1, 1, 3}), simple("", "cyclic", {2})}));
    v.push_back(prod("f20xc3", {simple("", "scalar_ext", {5, 1, 1, 4}), simple("", "cyclic", {3})}));
    v.push_back(prod("ea2_2xc3", {simple("", "elem_abelian", {2, 2}), simple("", "cyclic", {3})}));
    {
        GroupSpec w;
        w.name = "c2wrs2";
        w.kind = "wreath_sym";
        w.params = {2};
        w.parts = {simple("", "cyclic", {2})};
        v.push_back(w);
        GroupSpec w2;
        w2.name = "sym3wrs2";
        w2.kind = "wreath_sym";
        w2.params = {2};
        w2.parts = {simple("", "sym", {3})};
        v.push_back(w2);
    }
    return v;
}

}  // namespace

const std::vector<GroupSpec>& catalog_specs() {
    static const std::vector<GroupSpec> specs = build_catalog();
    return specs;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& s : catalog_specs()) out.push_back(s.name);
    return out;
}

bool catalog_has(const std::string& name) {
    for (const auto& s : catalog_specs())
        if (s.name == name) return true;
    return false;
}

PermGroup catalog_group(const std::string& name) {
    for (const auto& s : catalog_specs())
        if (s.name == name) return construct(s);
    throw Error("unknown catalog group: " + name);
}

void write_catalog_dir(const std::string& dir) {
    for (const auto& s : catalog_specs()) save_group(construct(s), s.name, dir + "/" + s.name + ".json");
}

GroupSpec parse_group_spec(const std::string& text) {
    if (catalog_has(text)) {
        for (const auto& s : catalog_specs())
            if (s.name == text) return s;
    }
    auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')')
        throw Error("unknown group: " + text +
                    " (expected a catalog name or kind(args) constructor)");
    GroupSpec s;
    s.kind = text.substr(0, open);
    s.name = text;
    std::string args = text.substr(open + 1, text.size() - open - 2);
    if (!args.empty()) {
        std::stringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, ',')) s.params.push_back(std::stoll(tok));
    }
    static const std::vector<std::string> kinds = {"trivial", "cyclic", "elem_abelian", "dihedral",
                                                   "sym",     "alt",    "psl2",         "pgl2",
                                                   "pgammal2_9", "scalar_ext", "sl2_3"};
    if (std::find(kinds.begin(), kinds.end(), s.kind) == kinds.end())
        throw Error("unknown constructor kind: " + s.kind);
    return s;
}

}  // namespace ppbase
