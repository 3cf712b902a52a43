// GF(2) linear-code engine for lengths up to 24: Gaussian elimination and
// canonical reduced echelon form, exact weight enumeration, duality and
// divisibility certificates, identification of the [24,12,8] Golay code by
// its parameter certificate, and a syndrome encoder/decoder correcting up
// to 3 errors (detecting weight-4 cosets).

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "golay24/bitstring24.hpp"
#include "golay24/golay_construction.hpp"

namespace golay24 {

/// Codeword counts by Hamming weight; counts[w] = number of codewords of
/// weight w. Sum of counts is 2^rank.
struct WeightEnumerator {
    std::array<std::uint64_t, 25> counts{};

    std::uint64_t total() const;

    /// True iff counts[w] == counts[n-w] for all w.
    bool symmetric(int n) const;

    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// Exact integer MacWilliams transform: the weight enumerator of the dual
/// of a dimension-k length-n code with enumerator `we`. Throws
/// std::logic_error if some transformed coefficient is negative or not
/// divisible by 2^k (impossible for a genuine enumerator).
std::array<std::uint64_t, 25> macwilliams_dual(const WeightEnumerator& we, int n, int k);

/// True iff the MacWilliams transform maps `we` to itself, the enumerator
/// half of the self-duality certificate.
bool macwilliams_self_consistent(const WeightEnumerator& we, int n, int k);

enum class DecodeStatus : std::uint8_t { Clean, Corrected, DetectedUncorrectable };

struct DecodeResult {
    BitString24 codeword;              // corrected word; echoes the input when uncorrectable
    std::uint16_t info = 0;            // 12 information bits, bit 1 = MSB
    std::vector<int> error_positions;  // 1-based, ascending, size <= 3
    DecodeStatus status = DecodeStatus::Clean;
};

/// A binary linear code of length n <= 24 presented by generator rows
/// (words as bit masks, bit k-1 = position k). Rank, canonical reduced
/// echelon basis, and the parity-check matrix are computed on
/// construction; everything is immutable afterwards, so instances are safe
/// to share across threads.
class LinearCode {
public:
    /// Sentinel entry of the syndrome table: no leader of weight <= 3.
    static constexpr std::uint32_t kNoLeader = 0xFFFFFFFFu;

    LinearCode(std::vector<std::uint32_t> generator_rows, int length);

    static LinearCode from_generator(const GeneratorMatrix& g);

    int length() const { return n_; }
    int rank() const { return static_cast<int>(rref_.size()); }

    const std::vector<std::uint32_t>& generator_rows() const { return rows_; }

    /// Reduced row-echelon basis, canonical for the row space; empty for
    /// the zero code.
    const std::vector<std::uint32_t>& echelon_basis() const { return rref_; }

    /// 1-based pivot positions of the echelon basis, ascending: the
    /// lexicographically first information set.
    const std::vector<int>& information_positions() const { return info_positions_; }

    /// n - rank parity-check rows; a word is a codeword iff all of them
    /// have even intersection with it.
    const std::vector<std::uint32_t>& parity_check_rows() const { return parity_rows_; }

    /// Row-space membership.
    bool contains(std::uint32_t word) const;

    /// Exact counts by full enumeration of the 2^rank codewords. Throws
    /// std::domain_error when rank > 20.
    WeightEnumerator weight_enumerator() const;

    /// Smallest positive weight with a nonzero count. Throws
    /// std::domain_error for the zero code.
    int min_distance() const;

    bool is_self_dual() const;
    bool is_doubly_even() const;

    /// The [24,12,8] self-dual doubly-even certificate, which pins the
    /// code down to the binary Golay code up to coordinate permutation.
    bool is_golay24() const;

    /// Systematic encoding of 12 information bits (bit 1 = MSB of `info`)
    /// onto the information positions. Requires length 24 and rank 12;
    /// throws std::domain_error otherwise.
    BitString24 encode(std::uint16_t info) const;

    /// Syndrome decoding via the precomputed leader table. Corrects every
    /// error pattern of weight <= 3; weight-4 cosets are reported as
    /// DetectedUncorrectable. Requires is_golay24(); throws
    /// std::logic_error otherwise.
    DecodeResult decode(const BitString24& received) const;

    /// (n-rank)-bit syndrome of a word; zero exactly on codewords.
    std::uint32_t syndrome(std::uint32_t word) const;

    /// The 4096-entry syndrome -> leader table (only built for the
    /// certified Golay code; empty otherwise). Entry s is the unique
    /// coset leader of weight <= 3 with syndrome s, or kNoLeader.
    const std::vector<std::uint32_t>& syndrome_table() const { return syndrome_table_; }

    /// Binary dump of the syndrome table: 4096 little-endian uint32
    /// entries indexed by the 12-bit syndrome, each a 24-bit leader mask
    /// or kNoLeader; no header. Requires is_golay24().
    void dump_syndrome_table(std::ostream& out) const;

    /// Reads a table dumped by dump_syndrome_table; throws
    /// std::invalid_argument if the stream does not hold exactly 4096
    /// entries.
    static std::vector<std::uint32_t> load_syndrome_table(std::istream& in);

private:
    std::uint16_t extract_info(std::uint32_t word) const;

    int n_;
    std::vector<std::uint32_t> rows_;
    std::vector<std::uint32_t> rref_;
    std::vector<int> info_positions_;
    std::vector<std::uint32_t> parity_rows_;
    std::optional<WeightEnumerator> enumerator_;  // cached for length-24 rank-12 codes
    bool golay_certified_ = false;
    std::vector<std::uint32_t> syndrome_table_;
};

}  // namespace golay24
