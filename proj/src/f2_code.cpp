#include "golay24/f2_code.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace golay24 {

std::uint64_t WeightEnumerator::total() const {
    std::uint64_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
}

bool WeightEnumerator::symmetric(int n) const {
    for (int w = 0; w <= n; ++w)
        if (counts[static_cast<std::size_t>(w)] != counts[static_cast<std::size_t>(n - w)])
            return false;
    return true;
}

namespace {

// Pascal triangle up to n = 24; C(24,12) = 2704156 fits easily.
constexpr std::array<std::array<std::int64_t, 25>, 25> make_binomials() {
    std::array<std::array<std::int64_t, 25>, 25> c{};
    for (int n = 0; n <= 24; ++n) {
        c[n][0] = 1;
        for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
    return c;
}

constexpr auto kBinomial = make_binomials();

// Krawtchouk polynomial K_j(w) for length n.
std::int64_t krawtchouk(int n, int j, int w) {
    std::int64_t sum = 0;
    for (int i = 0; i <= j; ++i) {
        if (i > w || j - i > n - w) continue;
        std::int64_t term = kBinomial[w][i] * kBinomial[n - w][j - i];
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

int parity_of(std::uint32_t x) { return std::popcount(x) & 1; }

}  // namespace

std::array<std::uint64_t, 25> macwilliams_dual(const WeightEnumerator& we, int n, int k) {
    if (n < 1 || n > 24) throw std::invalid_argument("macwilliams_dual: length outside 1..24");
    const std::int64_t size = std::int64_t{1} << k;
    std::array<std::uint64_t, 25> dual{};
    for (int j = 0; j <= n; ++j) {
        std::int64_t sum = 0;
        for (int w = 0; w <= n; ++w)
            sum += static_cast<std::int64_t>(we.counts[static_cast<std::size_t>(w)]) *
                   krawtchouk(n, j, w);
        if (sum < 0 || sum % size != 0)
            throw std::logic_error("macwilliams_dual: transform is not 2^k-divisible");
        dual[static_cast<std::size_t>(j)] = static_cast<std::uint64_t>(sum / size);
    }
    return dual;
}

bool macwilliams_self_consistent(const WeightEnumerator& we, int n, int k) {
    auto dual = macwilliams_dual(we, n, k);
    for (int w = 0; w <= n; ++w)
        if (dual[static_cast<std::size_t>(w)] != we.counts[static_cast<std::size_t>(w)])
            return false;
    return true;
}

LinearCode::LinearCode(std::vector<std::uint32_t> generator_rows, int length)
    : n_(length), rows_(std::move(generator_rows)) {
    if (n_ < 1 || n_ > 24) throw std::invalid_argument("LinearCode: length outside 1..24");
    const std::uint32_t full = n_ == 24 ? 0xFFFFFFu : (1u << n_) - 1;
    for (auto row : rows_)
        if (row & ~full) throw std::invalid_argument("LinearCode: row exceeds code length");

    // Forward elimination with leftmost pivots, then back-substitution: the
    // reduced echelon form is the canonical basis of the row space and its
    // pivot columns are the lexicographically first information set.
    std::vector<std::uint32_t> work;
    for (auto row : rows_)
        if (row != 0) work.push_back(row);
    for (int col = 0; col < n_ && !work.empty(); ++col) {
        std::uint32_t bit = 1u << col;
        std::size_t found = work.size();
        for (std::size_t r = 0; r < work.size(); ++r)
            if (work[r] & bit) {
                found = r;
                break;
            }
        if (found == work.size()) continue;
        std::uint32_t pivot_row = work[found];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(found));
        for (auto& row : work)
            if (row & bit) row ^= pivot_row;
        for (auto& row : rref_)
            if (row & bit) row ^= pivot_row;
        std::erase(work, 0u);
        rref_.push_back(pivot_row);
        info_positions_.push_back(col + 1);
    }

    // Parity checks: for every non-pivot column j the word e_j plus the
    // column-j pattern of the basis rows placed on the pivot positions.
    std::vector<bool> is_pivot(static_cast<std::size_t>(n_), false);
    for (int p : info_positions_) is_pivot[static_cast<std::size_t>(p - 1)] = true;
    for (int j = 0; j < n_; ++j) {
        if (is_pivot[static_cast<std::size_t>(j)]) continue;
        std::uint32_t check = 1u << j;
        for (std::size_t i = 0; i < rref_.size(); ++i)
            if (rref_[i] >> j & 1u)
                check |= 1u << (info_positions_[i] - 1);
        parity_rows_.push_back(check);
    }

    if (n_ == 24 && rank() == 12) {
        enumerator_ = weight_enumerator();
        const auto& counts = enumerator_->counts;
        int d = 0;
        for (int w = 1; w <= 24 && d == 0; ++w)
            if (counts[static_cast<std::size_t>(w)] != 0) d = w;
        golay_certified_ = is_self_dual() && is_doubly_even() && d == 8;
        if (golay_certified_) {
            syndrome_table_.assign(std::size_t{1} << 12, kNoLeader);
            auto place = [&](std::uint32_t pattern) {
                std::uint32_t s = syndrome(pattern);
                if (syndrome_table_[s] != kNoLeader)
                    throw std::logic_error("LinearCode: leader collision in syndrome table");
                syndrome_table_[s] = pattern;
            };
            place(0);
            for (int i = 0; i < 24; ++i) {
                place(1u << i);
                for (int j = i + 1; j < 24; ++j) {
                    place(1u << i | 1u << j);
                    for (int k = j + 1; k < 24; ++k) place(1u << i | 1u << j | 1u << k);
                }
            }
        }
    }
}

LinearCode LinearCode::from_generator(const GeneratorMatrix& g) {
    std::vector<std::uint32_t> rows;
    rows.reserve(12);
    for (const auto& row : g.rows()) rows.push_back(row.mask());
    return LinearCode(std::move(rows), 24);
}

bool LinearCode::contains(std::uint32_t word) const {
    for (std::size_t i = 0; i < rref_.size(); ++i) {
        std::uint32_t pivot_bit = 1u << (info_positions_[i] - 1);
        if (word & pivot_bit) word ^= rref_[i];
    }
    return word == 0;
}

WeightEnumerator LinearCode::weight_enumerator() const {
    if (enumerator_) return *enumerator_;
    const int k = rank();
    if (k > 20) throw std::domain_error("weight_enumerator: rank > 20 enumeration guard");
    WeightEnumerator we{};
    const std::uint64_t total = std::uint64_t{1} << k;
    std::uint32_t word = 0;
    we.counts[0] = 1;
    for (std::uint64_t m = 1; m < total; ++m) {
        // Gray-code walk: word for gray(m) differs from gray(m-1) in row ctz(m).
        word ^= rref_[static_cast<std::size_t>(std::countr_zero(m))];
        ++we.counts[static_cast<std::size_t>(std::popcount(word))];
    }
    return we;
}

int LinearCode::min_distance() const {
    if (rank() == 0) throw std::domain_error("min_distance: undefined for the zero code");
    auto we = weight_enumerator();
    for (int w = 1; w <= n_; ++w)
        if (we.counts[static_cast<std::size_t>(w)] != 0) return w;
    throw std::logic_error("min_distance: no nonzero codeword found");
}

bool LinearCode::is_self_dual() const {
    if (n_ % 2 != 0 || rank() != n_ / 2) return false;
    for (std::size_t i = 0; i < rref_.size(); ++i)
        for (std::size_t j = i; j < rref_.size(); ++j)
            if (parity_of(rref_[i] & rref_[j])) return false;
    return true;
}

bool LinearCode::is_doubly_even() const {
    for (std::size_t i = 0; i < rref_.size(); ++i) {
        if (std::popcount(rref_[i]) % 4 != 0) return false;
        for (std::size_t j = i + 1; j < rref_.size(); ++j)
            if (parity_of(rref_[i] & rref_[j])) return false;
    }
    return true;
}

bool LinearCode::is_golay24() const { return golay_certified_; }

std::uint16_t LinearCode::extract_info(std::uint32_t word) const {
    std::uint16_t info = 0;
    for (std::size_t i = 0; i < info_positions_.size(); ++i)
        if (word >> (info_positions_[i] - 1) & 1u)
            info |= static_cast<std::uint16_t>(1u << (11 - i));
    return info;
}

BitString24 LinearCode::encode(std::uint16_t info) const {
    if (n_ != 24 || rank() != 12)
        throw std::domain_error("encode: requires a length-24 code of rank 12");
    std::uint32_t word = 0;
    for (int i = 0; i < 12; ++i)
        if (info >> (11 - i) & 1u) word ^= rref_[static_cast<std::size_t>(i)];
    return BitString24::from_mask(word);
}

DecodeResult LinearCode::decode(const BitString24& received) const {
    if (!golay_certified_)
        throw std::logic_error("decode: requires the certified [24,12,8] code");
    DecodeResult result;
    std::uint32_t word = received.mask();
    std::uint32_t s = syndrome(word);
    if (s == 0) {
        result.codeword = received;
        result.info = extract_info(word);
        result.status = DecodeStatus::Clean;
        return result;
    }
    std::uint32_t leader = syndrome_table_[s];
    if (leader == kNoLeader) {
        result.codeword = received;
        result.info = extract_info(word);
        result.status = DecodeStatus::DetectedUncorrectable;
        return result;
    }
    std::uint32_t corrected = word ^ leader;
    result.codeword = BitString24::from_mask(corrected);
    result.info = extract_info(corrected);
    for (int k = 1; k <= 24; ++k)
        if (leader >> (k - 1) & 1u) result.error_positions.push_back(k);
    result.status = DecodeStatus::Corrected;
    return result;
}

std::uint32_t LinearCode::syndrome(std::uint32_t word) const {
    std::uint32_t s = 0;
    for (std::size_t t = 0; t < parity_rows_.size(); ++t)
        if (parity_of(parity_rows_[t] & word)) s |= 1u << t;
    return s;
}

void LinearCode::dump_syndrome_table(std::ostream& out) const {
    if (!golay_certified_)
        throw std::logic_error("dump_syndrome_table: requires the certified [24,12,8] code");
    for (std::uint32_t entry : syndrome_table_) {
        char bytes[4] = {static_cast<char>(entry & 0xFF), static_cast<char>(entry >> 8 & 0xFF),
                         static_cast<char>(entry >> 16 & 0xFF),
                         static_cast<char>(entry >> 24 & 0xFF)};
        out.write(bytes, 4);
    }
}

std::vector<std::uint32_t> LinearCode::load_syndrome_table(std::istream& in) {
    std::vector<std::uint32_t> table;
    table.reserve(4096);
    char bytes[4];
    while (in.read(bytes, 4)) {
        std::uint32_t entry = static_cast<std::uint8_t>(bytes[0]) |
                              static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[1])) << 8 |
                              static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[2])) << 16 |
                              static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[3])) << 24;
        table.push_back(entry);
    }
    if (table.size() != 4096 || in.gcount() != 0)
        throw std::invalid_argument("load_syndrome_table: expected exactly 4096 entries");
    return table;
}

}  // namespace golay24
