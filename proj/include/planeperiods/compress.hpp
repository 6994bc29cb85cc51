#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planeperiods/periods.hpp"
#include "planeperiods/product_cover.hpp"

namespace planeperiods {

inline constexpr int kPayloadFormatVersion = 1;

/// A few columns of a normalized period matrix, labelled by the adjoint
/// monomial at the same position of the basis.
struct CompressedPeriods {
    int format_version = kPayloadFormatVersion;
    int d = 0;
    int g = 0;
    std::vector<Monomial> column_labels;
    std::vector<int> column_indices;
    /// columns[c][i] = Omega(i, column_indices[c]).
    std::vector<std::vector<cplx>> columns;
    double tolerance = 0;

    [[nodiscard]] std::size_t entry_count() const noexcept { return column_labels.size() * static_cast<std::size_t>(g); }
    friend bool operator==(const CompressedPeriods&, const CompressedPeriods&) = default;
};

/// Payload entries over the g(g+1)/2 independent entries of a symmetric
/// g x g matrix, unreduced (40/55 for four columns at g = 10).
struct CompressionRatio {
    long long payload_entries = 0;
    long long full_entries = 0;
    [[nodiscard]] double value() const { return static_cast<double>(payload_entries) / static_cast<double>(full_entries); }
};

CompressionRatio compression_ratio(const CompressedPeriods& payload);

/// Throws InvalidArgument on a shape mismatch or a column set that does not
/// cover, or a tolerance that is not positive.
CompressedPeriods compress(const ComplexMatrix& omega, int d, const ColumnSet& cols, double tolerance);

/// Canonical JSON with a trailing crc32 checksum field over the whole
/// document (with the checksum digits zeroed).
std::string serialize(const CompressedPeriods& payload);
/// Throws ChecksumError when the bytes were altered, FormatError on an
/// unknown format_version or a malformed document.
CompressedPeriods deserialize(const std::string& bytes);

struct VerifyResult {
    bool accept = false;
    /// Largest per-component absolute deviation.
    double max_deviation = 0;
    /// Row of Omega and payload column label of the largest deviation.
    int worst_row = -1;
    Monomial worst_label{0, 0};
    std::vector<std::string> warnings;
};

/// Compares every payload column with the candidate's column carrying the
/// same label. `candidate_labels` is the candidate's basis order (defaults
/// to the adjoint basis for d). Throws MetadataMismatch when d, g or labels
/// disagree.
VerifyResult verify(const CompressedPeriods& payload, const ComplexMatrix& candidate, int candidate_d,
                    const std::optional<std::vector<Monomial>>& candidate_labels = std::nullopt);

}  // namespace planeperiods
