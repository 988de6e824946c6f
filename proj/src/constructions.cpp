#include "necgraph/constructions.hpp"

#include <bit>
#include <cctype>
#include <cstdint>
#include <stdexcept>

namespace necgraph {

namespace {

std::uint64_t swap_bit_pairs(std::uint64_t v) {
    return ((v & 0x5555555555555555ULL) << 1) | ((v & 0xAAAAAAAAAAAAAAAAULL) >> 1);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_symplectic_rank(int r) {
    if (r < 1 || r > 6)
        throw std::invalid_argument("symplectic rank must be between 1 and 6");
}

}  // namespace

Graph symplectic_graph(int r) {
    check_symplectic_rank(r);
    const int v = (1 << (2 * r)) - 1;
    GraphBuilder b(v);
    for (int x = 0; x < v; ++x) {
        const std::uint64_t fx = static_cast<std::uint64_t>(x) + 1;
        for (int y = x + 1; y < v; ++y) {
            const std::uint64_t fy = static_cast<std::uint64_t>(y) + 1;
            if (std::popcount(fx & swap_bit_pairs(fy)) % 2 == 1) b.add_edge(x, y);
        }
    }
    return b.build();
}

std::vector<std::string> symplectic_labels(int r) {
    check_symplectic_rank(r);
    const int v = (1 << (2 * r)) - 1;
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(v));
    for (int x = 1; x <= v; ++x) {
        std::string bits(static_cast<std::size_t>(2 * r), '0');
        for (int i = 0; i < 2 * r; ++i)
            if (x & (1 << (2 * r - 1 - i))) bits[static_cast<std::size_t>(i)] = '1';
        out.push_back(std::move(bits));
    }
    return out;
}

FieldSpec FieldSpec::make(int p, int k, std::vector<int> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1 || k > 3) throw std::invalid_argument("extension degree must be 1, 2 or 3");
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > 65536) throw std::invalid_argument("field order above 65536");
    if (modulus.size() != static_cast<std::size_t>(k) + 1)
        throw std::invalid_argument("modulus must have degree equal to the extension");
    for (int c : modulus)
        if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (k >= 2) {
        for (int x = 0; x < p; ++x) {
            long long val = 0;
            for (std::size_t i = modulus.size(); i-- > 0;)
                val = (val * x + modulus[i]) % p;
            if (val == 0)
                throw std::invalid_argument("modulus has root " + std::to_string(x) +
                                            ", not irreducible");
        }
    }
    FieldSpec s;
    s.p = p;
    s.k = k;
    s.modulus = std::move(modulus);
    return s;
}

int FieldSpec::q() const {
    int out = 1;
    for (int i = 0; i < k; ++i) out *= p;
    return out;
}

FieldSpec paley_default(int q) {
    if (q < 5 || q % 4 != 1)
        throw std::invalid_argument("paley order must be a prime power = 1 mod 4");
    int p = q;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    long long pw = 1;
    int k = 0;
    while (pw < q && k <= 3) {
        pw *= p;
        ++k;
    }
    if (pw != q || k > 3)
        throw std::invalid_argument("paley order must be p, p^2 or p^3");
    if (k == 1) return FieldSpec::make(p, 1, {0, 1});
    if (k == 2) {
        std::vector<char> residue(static_cast<std::size_t>(p), 0);
        for (int x = 1; x < p; ++x)
            residue[static_cast<std::size_t>((x * x) % p)] = 1;
        int n = 2;
        while (residue[static_cast<std::size_t>(n)]) ++n;
        return FieldSpec::make(p, 2, {(p - n) % p, 0, 1});
    }
    for (int c2 = 0; c2 < p; ++c2)
        for (int c1 = 0; c1 < p; ++c1)
            for (int c0 = 0; c0 < p; ++c0) {
                bool root = false;
                for (int x = 0; x < p && !root; ++x) {
                    long long val = 1;
                    for (int c : {c2, c1, c0}) val = (val * x + c) % p;
                    root = val == 0;
                }
                if (!root) return FieldSpec::make(p, 3, {c0, c1, c2, 1});
            }
    throw std::logic_error("no irreducible cubic found");
}

FiniteField::FiniteField(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.q()) {
    square_.assign(static_cast<std::size_t>(q_), 0);
    for (int a = 1; a < q_; ++a) square_[static_cast<std::size_t>(mul(a, a))] = 1;
}

std::vector<int> FiniteField::to_digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(spec_.k));
    for (int i = 0; i < spec_.k; ++i) {
        d[static_cast<std::size_t>(i)] = a % spec_.p;
        a /= spec_.p;
    }
    return d;
}

int FiniteField::from_digits(const std::vector<int>& d) const {
    int out = 0;
    for (std::size_t i = d.size(); i-- > 0;) out = out * spec_.p + d[i];
    return out;
}

int FiniteField::add(int a, int b) const {
    const auto da = to_digits(a), db = to_digits(b);
    std::vector<int> d(da.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = (da[i] + db[i]) % spec_.p;
    return from_digits(d);
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::neg(int a) const {
    auto d = to_digits(a);
    for (int& x : d) x = (spec_.p - x) % spec_.p;
    return from_digits(d);
}

int FiniteField::mul(int a, int b) const {
    const int k = spec_.k;
    const int p = spec_.p;
    const auto da = to_digits(a), db = to_digits(b);
    std::vector<int> c(static_cast<std::size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            c[static_cast<std::size_t>(i + j)] =
                (c[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
    for (int i = 2 * k - 2; i >= k; --i) {
        const int coeff = c[static_cast<std::size_t>(i)];
        if (coeff == 0) continue;
        c[static_cast<std::size_t>(i)] = 0;
        for (int j = 0; j < k; ++j) {
            int& slot = c[static_cast<std::size_t>(i - k + j)];
            slot = ((slot - coeff * spec_.modulus[static_cast<std::size_t>(j)]) % p + p) % p;
        }
    }
    c.resize(static_cast<std::size_t>(k));
    return from_digits(c);
}

bool FiniteField::is_square(int a) const {
    if (a < 0 || a >= q_) throw std::out_of_range("field element out of range");
    return a != 0 && square_[static_cast<std::size_t>(a)];
}

std::string FiniteField::element_name(int a) const {
    if (a < 0 || a >= q_) throw std::out_of_range("field element out of range");
    if (spec_.k == 1) return std::to_string(a);
    if (a == 0) return "0";
    const auto d = to_digits(a);
    std::string out;
    for (int i = spec_.k - 1; i >= 0; --i) {
        const int coef = d[static_cast<std::size_t>(i)];
        if (coef == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(coef);
            continue;
        }
        if (coef != 1) out += std::to_string(coef);
        out += 'x';
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Graph paley_graph(const FieldSpec& spec) {
    const FiniteField f(spec);
    if (f.q() % 4 != 1)
        throw std::invalid_argument("paley graph needs field order = 1 mod 4");
    GraphBuilder b(f.q());
    for (int x = 0; x < f.q(); ++x)
        for (int y = x + 1; y < f.q(); ++y)
            if (f.is_square(f.sub(x, y))) b.add_edge(x, y);
    return b.build();
}

std::vector<std::string> paley_labels(const FieldSpec& spec) {
    const FiniteField f(spec);
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(f.q()));
    for (int a = 0; a < f.q(); ++a) out.push_back(f.element_name(a));
    return out;
}

GroupSpec GroupSpec::cyclic(int n) { return product({n}); }

GroupSpec GroupSpec::product(std::vector<int> orders) {
    if (orders.empty()) throw std::invalid_argument("group product needs a factor");
    long long total = 1;
    for (int n : orders) {
        if (n < 2) throw std::invalid_argument("cyclic factor must be at least 2");
        total *= n;
        if (total > 64) throw std::invalid_argument("group order above 64");
    }
    GroupSpec g;
    g.kind = Kind::cyclic_product;
    g.orders = std::move(orders);
    return g;
}

GroupSpec GroupSpec::dihedral4() {
    GroupSpec g;
    g.kind = Kind::dihedral4;
    return g;
}

GroupSpec GroupSpec::quaternion8() {
    GroupSpec g;
    g.kind = Kind::quaternion8;
    return g;
}

GroupSpec GroupSpec::parse(std::string_view name) {
    if (name == "d4") return dihedral4();
    if (name == "q8") return quaternion8();
    const auto bad = [&] {
        return std::invalid_argument("bad group name: " + std::string(name));
    };
    std::vector<int> orders;
    std::size_t i = 0;
    auto read_int = [&]() {
        const std::size_t start = i;
        while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
        if (i == start || i - start > 4) throw bad();
        int out = 0;
        for (std::size_t j = start; j < i; ++j) out = out * 10 + (name[j] - '0');
        return out;
    };
    while (true) {
        if (i >= name.size() || name[i] != 'z') throw bad();
        ++i;
        const int n = read_int();
        int rep = 1;
        if (i < name.size() && name[i] == '^') {
            ++i;
            rep = read_int();
            if (rep < 1) throw bad();
        }
        for (int r = 0; r < rep; ++r) orders.push_back(n);
        if (i == name.size()) break;
        if (name[i] != 'x') throw bad();
        ++i;
    }
    return product(std::move(orders));
}

std::string GroupSpec::name() const {
    if (kind == Kind::dihedral4) return "d4";
    if (kind == Kind::quaternion8) return "q8";
    std::string out;
    for (std::size_t i = 0; i < orders.size();) {
        std::size_t j = i;
        while (j < orders.size() && orders[j] == orders[i]) ++j;
        if (!out.empty()) out += 'x';
        out += "z" + std::to_string(orders[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

int GroupSpec::order() const {
    if (kind != Kind::cyclic_product) return 8;
    int total = 1;
    for (int n : orders) total *= n;
    return total;
}

std::vector<std::vector<int>> cayley_table(const GroupSpec& g) {
    if (g.kind == GroupSpec::Kind::dihedral4) {
        // 0..3 rotations, 4..7 reflections r^i s
        return {{0, 1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 0, 5, 6, 7, 4},
                {2, 3, 0, 1, 6, 7, 4, 5}, {3, 0, 1, 2, 7, 4, 5, 6},
                {4, 7, 6, 5, 0, 3, 2, 1}, {5, 4, 7, 6, 1, 0, 3, 2},
                {6, 5, 4, 7, 2, 1, 0, 3}, {7, 6, 5, 4, 3, 2, 1, 0}};
    }
    if (g.kind == GroupSpec::Kind::quaternion8) {
        // 0..7 = 1, i, j, k, -1, -i, -j, -k
        return {{0, 1, 2, 3, 4, 5, 6, 7}, {1, 4, 3, 6, 5, 0, 7, 2},
                {2, 7, 4, 1, 6, 3, 0, 5}, {3, 2, 5, 4, 7, 6, 1, 0},
                {4, 5, 6, 7, 0, 1, 2, 3}, {5, 0, 7, 2, 1, 4, 3, 6},
                {6, 3, 0, 5, 2, 7, 4, 1}, {7, 6, 1, 0, 3, 2, 5, 4}};
    }
    const int n = g.order();
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ra = a, rb = b, place = 1, sum = 0;
            for (int f : g.orders) {
                sum += ((ra % f + rb % f) % f) * place;
                ra /= f;
                rb /= f;
                place *= f;
            }
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = sum;
        }
    return table;
}

SteinerTripleSystem bose_sts(int v) {
    if (v < 9 || v % 6 != 3)
        throw std::invalid_argument("triple system order must be 3 mod 6 and at least 9");
    const int m = v / 3;
    const int inv2 = (m + 1) / 2;  // doubling inv2 gives 1 mod m
    const auto pt = [m](int i, int c) { return i + c * m; };
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(3 * m - 1) / 2);
    for (int i = 0; i < m; ++i) blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                blocks.push_back({pt(i, c), pt(j, c), pt((i + j) * inv2 % m, (c + 1) % 3)});
    return SteinerTripleSystem::make(v, std::move(blocks));
}

namespace {

std::vector<std::pair<int, int>> lex_pairs_of_five() {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) out.emplace_back(a, b);
    return out;
}

}  // namespace

Graph petersen() {
    const auto pairs = lex_pairs_of_five();
    GraphBuilder b(10);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const auto [a1, b1] = pairs[i];
            const auto [a2, b2] = pairs[j];
            if (a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2)
                b.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return b.build();
}

IncidenceStructure star_structure() {
    return IncidenceStructure::make(
        10, {{0, 1, 2, 3}, {0, 4, 5, 6}, {1, 4, 7, 8}, {2, 5, 7, 9}, {3, 6, 8, 9}});
}

std::vector<std::string> net_cell_labels(int n) {
    if (n < 1) throw std::invalid_argument("net order must be positive");
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out.push_back("(" + std::to_string(r) + "," + std::to_string(c) + ")");
    return out;
}

std::vector<std::string> sts_block_labels(const SteinerTripleSystem& sts) {
    std::vector<std::string> out;
    out.reserve(sts.triples().size());
    for (const auto& tr : sts.triples())
        out.push_back("{" + std::to_string(tr[0]) + "," + std::to_string(tr[1]) + "," +
                      std::to_string(tr[2]) + "}");
    return out;
}

std::vector<std::string> petersen_labels() {
    std::vector<std::string> out;
    for (const auto& [a, b] : lex_pairs_of_five())
        out.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "}");
    return out;
}

}  // namespace necgraph
