#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pluck/rat.hpp"
#include "pluck/schur.hpp"

namespace pluck {

/// A partition without 1's, lambda = (2^e_2, ..., r^e_r), stored with its
/// parts weakly decreasing. The empty partition is allowed.
class InputPartition {
public:
    InputPartition() = default;

    /// Parts in any order; they are sorted descending. Throws
    /// InvalidPartition if any part is smaller than 2.
    explicit InputPartition(std::vector<int> parts);

    /// Comma-separated parts, e.g. "10,2,2" or "2,10,2". Whitespace around
    /// parts is tolerated; empty input, empty fields and non-numeric text are not.
    static InputPartition parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    /// |lambda|.
    [[nodiscard]] int weight() const { return weight_; }
    /// c = |reduction|, the codimension of the stratum.
    [[nodiscard]] int codim() const { return weight_ - length(); }
    /// lambda_1; 0 for the empty partition.
    [[nodiscard]] int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    [[nodiscard]] int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

    /// e_part, the number of occurrences of part.
    [[nodiscard]] int multiplicity(int part) const;
    /// part -> e_part over the distinct parts.
    [[nodiscard]] std::map<int, int> multiplicities() const;
    /// prod_i e_i!.
    [[nodiscard]] BigInt multiplicity_factorial() const;

    /// (lambda_1 - 1, ..., lambda_k - 1).
    [[nodiscard]] std::vector<int> reduction() const;

    /// lambda with one copy of part removed.
    [[nodiscard]] InputPartition without(int part) const;

    /// Canonical key, parts descending joined by commas; "" for the empty partition.
    [[nodiscard]] std::string key() const;

    friend bool operator==(const InputPartition& a, const InputPartition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All nonempty partitions without 1's of weight <= max_weight, ordered by
/// weight, then lexicographically decreasing on the part list.
std::vector<InputPartition> enumerate_partitions_no_ones(int max_weight);

/// Number of semistandard Young tableaux of the two-row shape with the given
/// content (content[i] copies of the letter i+1). Throws WeightMismatch when
/// the content does not fill the shape.
BigInt kostka_two_row(const TwoRowPartition& shape, const std::vector<int>& content);

/// True iff K_{shape, reduction} = 0, i.e. shape.r1 < max(reduction).
bool kostka_vanishing(const TwoRowPartition& shape, const std::vector<int>& reduction);

/// Unsigned Stirling number of the first kind [m, m-k] = sigma_k(1, ..., m-1).
/// Requires m >= 1 and 0 <= k <= m-1, else OutOfRange.
BigInt stirling_first(int m, int k);

/// h_nu = prod_i h_{nu_i}(a, b) expanded in Schur polynomials.
RatClass complete_homogeneous_class(const std::vector<int>& nu);

}  // namespace pluck
