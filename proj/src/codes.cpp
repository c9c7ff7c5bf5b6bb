#include "ccode/codes.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace ccode {

BitMatrix::BitMatrix(int cols, std::vector<BitWord> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.size() != cols_) throw InvalidParameter("row length does not match column count");
}

void BitMatrix::push_back(const BitWord& w) {
    if (w.size() != cols_) throw InvalidParameter("row length does not match column count");
    rows_.push_back(w);
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) m.push_back(BitWord::unit(n, i));
    return m;
}

BitMatrix BitMatrix::zero(int rows, int cols) {
    return BitMatrix(cols, std::vector<BitWord>(rows, BitWord(cols)));
}

Echelon echelon(const std::vector<BitWord>& rows, int n) {
    Echelon e;
    for (BitWord w : rows) {
        if (w.size() != n) throw InvalidParameter("row length does not match n");
        w = e.reduce(w);
        if (w.is_zero()) continue;
        const int p = w.lowest();
        for (auto& r : e.rows)
            if (r.get(p)) r ^= w;
        e.rows.push_back(w);
        e.pivots.push_back(p);
    }
    return e;
}

BitWord Echelon::reduce(BitWord w) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (w.get(pivots[i])) w ^= rows[i];
    return w;
}

std::vector<int> Echelon::coordinates(const BitWord& w) const {
    std::vector<int> a(rows.size());
    BitWord rest = w;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (w.get(pivots[i])) {
            a[i] = 1;
            rest ^= rows[i];
        }
    if (!rest.is_zero()) return {};
    return a;
}

int gf2_rank(const BitMatrix& m) {
    return static_cast<int>(echelon(m.row_words(), m.cols()).rows.size());
}

std::vector<BitWord> null_space(const std::vector<BitWord>& rows, int n) {
    const Echelon e = echelon(rows, n);
    std::vector<char> is_pivot(n, 0);
    for (int p : e.pivots) is_pivot[p] = 1;
    std::vector<BitWord> out;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitWord v = BitWord::unit(n, f);
        for (std::size_t i = 0; i < e.rows.size(); ++i)
            if (e.rows[i].get(f)) v.set(e.pivots[i]);
        out.push_back(v);
    }
    return out;
}

BinaryLinearCode BinaryLinearCode::from_generator(int n, std::vector<BitWord> rows) {
    BitMatrix g(n, rows);
    if (gf2_rank(g) != g.rows()) throw InvalidParameter("generator rows are linearly dependent");
    BinaryLinearCode c;
    c.n_ = n;
    c.k_ = g.rows();
    c.h_ = BitMatrix(n, null_space(rows, n));
    c.g_ = std::move(g);
    return c;
}

BinaryLinearCode BinaryLinearCode::from_parity_check(int n, std::vector<BitWord> rows) {
    BitMatrix h(n, rows);
    if (gf2_rank(h) != h.rows()) throw InvalidParameter("parity-check rows are linearly dependent");
    BinaryLinearCode c;
    c.n_ = n;
    c.k_ = n - h.rows();
    c.g_ = BitMatrix(n, null_space(rows, n));
    c.h_ = std::move(h);
    return c;
}

bool BinaryLinearCode::contains(const BitWord& w) const {
    if (w.size() != n_) return false;
    for (const auto& h : h_.row_words())
        if (dot(h, w)) return false;
    return true;
}

bool BinaryLinearCode::same_row_space(const BinaryLinearCode& o) const {
    if (n_ != o.n_ || k_ != o.k_) return false;
    for (const auto& g : o.g_.row_words())
        if (!contains(g)) return false;
    return true;
}

BinaryLinearCode dual_code(const BinaryLinearCode& c) {
    return BinaryLinearCode::from_generator(c.n(), c.parity_check().row_words());
}

static std::vector<BitWord> hamming_rows(int m) {
    if (m < 2) throw InvalidParameter("Hamming/simplex code needs m >= 2, got " + std::to_string(m));
    const int n = (1 << m) - 1;
    if (n > kMaxBits) throw InvalidParameter("blocklength exceeds " + std::to_string(kMaxBits));
    std::vector<BitWord> rows;
    for (int r = 0; r < m; ++r) {
        BitWord w(n);
        for (int i = 1; i <= n; ++i)
            if ((i >> (m - 1 - r)) & 1) w.set(i - 1);
        rows.push_back(w);
    }
    return rows;
}

BinaryLinearCode hamming_code(int m) {
    return BinaryLinearCode::from_parity_check((1 << m) - 1, hamming_rows(m));
}

BinaryLinearCode simplex_code(int m) {
    return BinaryLinearCode::from_generator((1 << m) - 1, hamming_rows(m));
}

BinaryLinearCode reed_muller(int m, int r) {
    if (m < 0 || r < 0 || r > m)
        throw InvalidParameter("Reed-Muller needs 0 <= r <= m, got m=" + std::to_string(m) +
                               " r=" + std::to_string(r));
    const int n = 1 << m;
    if (n > kMaxBits) throw InvalidParameter("blocklength exceeds " + std::to_string(kMaxBits));
    std::vector<BitWord> rows;
    for (int deg = 0; deg <= r; ++deg) {
        // variable subsets of size deg in lexicographic order; variable t is x_{t+1}
        std::vector<int> sub(deg);
        for (int i = 0; i < deg; ++i) sub[i] = i;
        while (true) {
            BitWord w(n);
            for (int j = 0; j < n; ++j) {
                bool v = true;
                for (int t : sub) v = v && ((j >> (m - 1 - t)) & 1);
                if (v) w.set(j);
            }
            rows.push_back(w);
            int i = deg - 1;
            while (i >= 0 && sub[i] == m - deg + i) --i;
            if (i < 0) break;
            ++sub[i];
            for (int t = i + 1; t < deg; ++t) sub[t] = sub[t - 1] + 1;
        }
    }
    return BinaryLinearCode::from_generator(n, std::move(rows));
}

BinaryLinearCode whole_space(int n) {
    return BinaryLinearCode::from_generator(n, BitMatrix::identity(n).row_words());
}

BinaryLinearCode zero_code(int n) { return BinaryLinearCode::from_generator(n, {}); }

static void check_cap(int k, int cap) {
    if (k > cap)
        throw CapExceeded("enumeration of 2^" + std::to_string(k) + " words exceeds cap 2^" +
                          std::to_string(cap));
}

CodewordStream::CodewordStream(const BinaryLinearCode& c, int cap)
    : basis_(c.generator().row_words()), cur_(c.n()) {
    check_cap(c.k(), cap);
    total_ = std::uint64_t{1} << c.k();
}

bool CodewordStream::next(BitWord& out) {
    if (step_ >= total_) return false;
    if (step_ > 0) cur_ ^= basis_[std::countr_zero(step_)];
    ++step_;
    out = cur_;
    return true;
}

void for_each_in_span(const std::vector<BitWord>& basis, int n,
                      const std::function<void(const BitWord&)>& fn, int cap) {
    const int k = static_cast<int>(basis.size());
    check_cap(k, cap);
    BitWord cur(n);
    fn(cur);
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t s = 1; s < total; ++s) {
        cur ^= basis[std::countr_zero(s)];
        fn(cur);
    }
}

std::vector<BitWord> enumerate_codewords(const BinaryLinearCode& c, int cap) {
    std::vector<BitWord> out;
    CodewordStream st(c, cap);
    out.reserve(st.total());
    BitWord w;
    while (st.next(w)) out.push_back(w);
    return out;
}

std::vector<std::uint64_t> weight_histogram(const BinaryLinearCode& c, int cap) {
    std::vector<std::uint64_t> h(c.n() + 1, 0);
    for_each_in_span(c.generator().row_words(), c.n(), [&](const BitWord& w) { ++h[w.weight()]; },
                     cap);
    return h;
}

CosetDecomposition coset_decompose(const BinaryLinearCode& super_code,
                                   const BinaryLinearCode& sub_code, int cap) {
    if (super_code.n() != sub_code.n()) throw StructureError("codes have different lengths");
    for (const auto& g : sub_code.generator().row_words())
        if (!super_code.contains(g)) throw StructureError("sub code is not contained in super code");
    const Echelon sub = echelon(sub_code.generator().row_words(), sub_code.n());
    // complement of the sub code inside the super code, already reduced
    std::vector<BitWord> extra;
    Echelon joint = sub;
    for (const auto& g : super_code.generator().row_words()) {
        if (joint.in_span(g)) continue;
        extra.push_back(sub.reduce(g));
        joint = echelon([&] {
            auto rows = joint.rows;
            rows.push_back(g);
            return rows;
        }(), super_code.n());
    }
    CosetDecomposition d{super_code, sub_code, {}};
    for_each_in_span(extra, super_code.n(), [&](const BitWord& w) { d.reps.push_back(sub.reduce(w)); },
                     cap);
    std::sort(d.reps.begin(), d.reps.end(), [](const BitWord& a, const BitWord& b) { return lex_less(a, b); });
    return d;
}

std::vector<std::uint64_t> coset_weight_enumerator(const BitWord& rep, const BinaryLinearCode& sub_code,
                                                   int cap) {
    std::vector<std::uint64_t> h(sub_code.n() + 1, 0);
    for_each_in_span(sub_code.generator().row_words(), sub_code.n(),
                     [&](const BitWord& w) { ++h[(w ^ rep).weight()]; }, cap);
    return h;
}

BinaryLinearCode parse_code(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0, n = -1, k = -1;
    bool parity = false, header = false;
    std::vector<BitWord> rows;
    const std::regex head(R"(^\s*n=(\d+)\s+k=(\d+)\s+kind=(generator|parity)\s*$)");
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!header) {
            std::smatch m;
            if (!std::regex_match(line, m, head)) fail("expected header 'n=<int> k=<int> kind=generator|parity'");
            n = std::stoi(m[1]);
            k = std::stoi(m[2]);
            parity = m[3] == "parity";
            if (n < 1 || n > kMaxBits) fail("n out of range");
            if (k > n) fail("k exceeds n");
            header = true;
            continue;
        }
        if (static_cast<int>(line.size()) != n)
            fail("row length " + std::to_string(line.size()) + " differs from n=" + std::to_string(n));
        if (line.find_first_not_of("01") != std::string::npos) fail("row contains characters other than 0/1");
        rows.push_back(BitWord::from_string(line));
        const Echelon e = echelon(rows, n);
        if (e.rows.size() != rows.size()) fail("row is linearly dependent on earlier rows (rank deficiency)");
    }
    if (!header) throw ParseError("line 1: missing header");
    const int want = parity ? n - k : k;
    if (static_cast<int>(rows.size()) != want)
        throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(want) +
                         " rows, found " + std::to_string(rows.size()));
    return parity ? BinaryLinearCode::from_parity_check(n, rows) : BinaryLinearCode::from_generator(n, rows);
}

NamedCode parse_code_spec(const std::string& text) {
    if (text.rfind("file:", 0) == 0) {
        const std::string path = text.substr(5);
        return {load_code(path), {}, path};
    }
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto get = [&](const char* key) {
        const std::regex re(std::string("(^|,)") + key + "=(-?\\d+)(,|$)");
        std::smatch m;
        if (!std::regex_search(params, m, re))
            throw ParseError("code '" + text + "': missing parameter '" + key + "'");
        return std::stoi(m[2]);
    };
    NamedCode nc;
    nc.label = text;
    if (kind == "rm") {
        nc.family = {CodeFamily::ReedMuller, get("m"), get("r")};
        nc.code = reed_muller(nc.family.m, nc.family.r);
    } else if (kind == "hamming") {
        nc.family = {CodeFamily::Hamming, get("m"), 0};
        nc.code = hamming_code(nc.family.m);
    } else if (kind == "simplex") {
        nc.family = {CodeFamily::Simplex, get("m"), 0};
        nc.code = simplex_code(nc.family.m);
    } else {
        throw ParseError("unknown code '" + text + "' (expected rm:, hamming:, simplex: or file:)");
    }
    return nc;
}

BinaryLinearCode load_code(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open code file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_code(ss.str());
}

std::string format_code(const BinaryLinearCode& c) {
    std::string out = "n=" + std::to_string(c.n()) + " k=" + std::to_string(c.k()) + " kind=generator\n";
    for (const auto& r : c.generator().row_words()) out += r.str() + "\n";
    return out;
}

void save_code(const BinaryLinearCode& c, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write code file '" + path + "'");
    f << format_code(c);
}

}  // namespace ccode
