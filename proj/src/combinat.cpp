#include "pluck/combinat.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "pluck/errors.hpp"

namespace pluck {

InputPartition::InputPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (int p : parts_) {
        if (p < 2)
            throw InvalidPartition("partition parts must be at least 2, got " + std::to_string(p));
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

InputPartition InputPartition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw InvalidPartition("cannot parse partition '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return InputPartition(std::move(parts));
}

int InputPartition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::map<int, int> InputPartition::multiplicities() const {
    std::map<int, int> out;
    for (int p : parts_) ++out[p];
    return out;
}

BigInt InputPartition::multiplicity_factorial() const {
    BigInt prod = 1;
    for (const auto& [part, e] : multiplicities()) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
        prod *= f;
    }
    return prod;
}

std::vector<int> InputPartition::reduction() const {
    std::vector<int> out;
    out.reserve(parts_.size());
    for (int p : parts_) out.push_back(p - 1);
    return out;
}

InputPartition InputPartition::without(int part) const {
    auto it = std::find(parts_.begin(), parts_.end(), part);
    if (it == parts_.end()) throw InvalidPartition("part " + std::to_string(part) + " not in partition " + key());
    std::vector<int> rest = parts_;
    rest.erase(rest.begin() + (it - parts_.begin()));
    return InputPartition(std::move(rest));
}

std::string InputPartition::key() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

// Partitions of n into parts in [2, max_part], lexicographically decreasing.
void partitions_into(int n, int max_part, std::vector<int>& prefix, std::vector<InputPartition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(n, max_part); p >= 2; --p) {
        prefix.push_back(p);
        partitions_into(n - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<InputPartition> enumerate_partitions_no_ones(int max_weight) {
    std::vector<InputPartition> out;
    std::vector<int> prefix;
    for (int w = 2; w <= max_weight; ++w) partitions_into(w, w, prefix, out);
    return out;
}

BigInt kostka_two_row(const TwoRowPartition& shape, const std::vector<int>& content) {
    const int total = std::accumulate(content.begin(), content.end(), 0);
    if (total != shape.weight())
        throw WeightMismatch("content of weight " + std::to_string(total) + " does not fill shape of weight " +
                             std::to_string(shape.weight()));
    for (int c : content)
        if (c < 0) throw WeightMismatch("negative content entry");

    // Place the copies of each letter in turn, splitting them between the two
    // rows. A filling is semistandard iff, after every letter, the second row
    // is no longer than the part of the first row filled before that letter.
    BigInt count = 0;
    std::function<void(std::size_t, int, int)> place = [&](std::size_t letter, int top, int bottom) {
        if (letter == content.size()) {
            if (top == shape.r1 && bottom == shape.r2) count += 1;
            return;
        }
        const int n = content[letter];
        for (int down = 0; down <= n; ++down) {
            const int new_top = top + n - down;
            const int new_bottom = bottom + down;
            if (new_top > shape.r1 || new_bottom > shape.r2) continue;
            if (new_bottom > top) break;
            place(letter + 1, new_top, new_bottom);
        }
    };
    place(0, 0, 0);
    return count;
}

bool kostka_vanishing(const TwoRowPartition& shape, const std::vector<int>& reduction) {
    const int total = std::accumulate(reduction.begin(), reduction.end(), 0);
    if (total != shape.weight())
        throw WeightMismatch("reduction of weight " + std::to_string(total) + " does not fill shape of weight " +
                             std::to_string(shape.weight()));
    const int largest = reduction.empty() ? 0 : *std::max_element(reduction.begin(), reduction.end());
    return shape.r1 < largest;
}

BigInt stirling_first(int m, int k) {
    if (m < 1 || k < 0 || k > m - 1)
        throw OutOfRange("stirling_first(" + std::to_string(m) + ", " + std::to_string(k) + ") out of range");
    // sigma[j] = e_j(1, ..., i) built up one variable at a time
    std::vector<BigInt> sigma(static_cast<std::size_t>(k) + 1, 0);
    sigma[0] = 1;
    for (int i = 1; i <= m - 1; ++i)
        for (int j = std::min(i, k); j >= 1; --j) sigma[static_cast<std::size_t>(j)] += sigma[static_cast<std::size_t>(j - 1)] * i;
    return sigma[static_cast<std::size_t>(k)];
}

RatClass complete_homogeneous_class(const std::vector<int>& nu) {
    RatClass out = RatClass::one();
    for (int part : nu) {
        if (part < 0) throw std::invalid_argument("complete_homogeneous_class: negative part");
        out = class_product(out, RatClass::single(TwoRowPartition(part, 0), Rat(1)));
    }
    return out;
}

}  // namespace pluck
