#include "planeperiods/compress.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "planeperiods/error.hpp"
#include "planeperiods/json_io.hpp"

namespace planeperiods {

namespace {

constexpr const char* kChecksumKey = "\"checksum\": \"";
constexpr std::size_t kChecksumDigits = 8;

std::string crc_hex(const std::string& bytes) {
    const uLong crc = crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef*>(bytes.data()),
                            static_cast<uInt>(bytes.size()));
    char buf[16];
    std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(crc));
    return buf;
}

template <class T>
T field(const Json& doc, const char* key) {
    if (!doc.contains(key)) throw FormatError("payload", std::string("missing field '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("payload", std::string("bad field '") + key + "': " + e.what());
    }
}

}  // namespace

CompressionRatio compression_ratio(const CompressedPeriods& payload) {
    const auto g = static_cast<long long>(payload.g);
    return {static_cast<long long>(payload.entry_count()), g * (g + 1) / 2};
}

CompressedPeriods compress(const ComplexMatrix& omega, int d, const ColumnSet& cols, double tolerance) {
    const int g = genus(d);
    if (omega.rows() != g || omega.cols() != g)
        throw InvalidArgument("compress", "Omega must be " + std::to_string(g) + "x" + std::to_string(g) + " for degree " +
                                              std::to_string(d));
    if (cols.degree() != d) throw InvalidArgument("compress", "column set was built for another degree");
    if (!cover_check(d, cols).complete())
        throw InvalidArgument("compress", "column set " + to_string(cols) + " does not cover");
    if (!(tolerance > 0)) throw InvalidArgument("compress", "tolerance must be positive");

    CompressedPeriods p;
    p.d = d;
    p.g = g;
    p.tolerance = tolerance;
    const AdjointBasis basis(d);
    for (Monomial label : cols.labels()) {
        const auto index = monomial_index(label, basis);
        if (!index) throw InvalidArgument("compress", "label " + to_string(label) + " is not an adjoint monomial");
        p.column_labels.push_back(label);
        p.column_indices.push_back(static_cast<int>(*index));
        std::vector<cplx> column;
        for (int i = 0; i < g; ++i) column.push_back(omega(i, static_cast<Eigen::Index>(*index)));
        p.columns.push_back(std::move(column));
    }
    return p;
}

std::string serialize(const CompressedPeriods& p) {
    Json doc;
    doc["format_version"] = p.format_version;
    doc["d"] = p.d;
    doc["g"] = p.g;
    doc["column_labels"] = to_json(p.column_labels);
    doc["column_indices"] = p.column_indices;
    doc["tolerance"] = p.tolerance;
    Json columns = Json::array();
    for (const auto& c : p.columns) {
        Json col = Json::array();
        for (const cplx& z : c) col.push_back(to_json(z));
        columns.push_back(std::move(col));
    }
    doc["columns"] = std::move(columns);
    doc["checksum"] = std::string(kChecksumDigits, '0');
    std::string text = dump_canonical(doc);
    const auto pos = text.rfind(kChecksumKey) + std::char_traits<char>::length(kChecksumKey);
    text.replace(pos, kChecksumDigits, crc_hex(text));
    return text;
}

CompressedPeriods deserialize(const std::string& bytes) {
    const auto key = bytes.rfind(kChecksumKey);
    if (key == std::string::npos) throw FormatError("payload", "no checksum field");
    const auto pos = key + std::char_traits<char>::length(kChecksumKey);
    if (pos + kChecksumDigits > bytes.size()) throw ChecksumError("payload", "truncated checksum");
    const std::string stored = bytes.substr(pos, kChecksumDigits);
    std::string zeroed = bytes;
    zeroed.replace(pos, kChecksumDigits, std::string(kChecksumDigits, '0'));
    if (crc_hex(zeroed) != stored) throw ChecksumError("payload", "checksum mismatch: payload bytes were altered");

    Json doc;
    try {
        doc = Json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("payload", std::string("not valid JSON: ") + e.what());
    }
    CompressedPeriods p;
    p.format_version = field<int>(doc, "format_version");
    if (p.format_version != kPayloadFormatVersion)
        throw FormatError("payload", "unknown format_version " + std::to_string(p.format_version));
    p.d = field<int>(doc, "d");
    p.g = field<int>(doc, "g");
    p.column_labels = monomials_from_json(doc.at("column_labels"));
    p.column_indices = field<std::vector<int>>(doc, "column_indices");
    p.tolerance = field<double>(doc, "tolerance");
    if (!doc.contains("columns") || !doc["columns"].is_array()) throw FormatError("payload", "missing columns");
    for (const auto& col : doc["columns"]) {
        std::vector<cplx> c;
        for (const auto& z : col) c.push_back(complex_from_json(z));
        if (static_cast<int>(c.size()) != p.g) throw FormatError("payload", "column length differs from g");
        p.columns.push_back(std::move(c));
    }
    if (p.columns.size() != p.column_labels.size() || p.column_indices.size() != p.column_labels.size())
        throw FormatError("payload", "labels, indices and columns differ in number");
    if (p.d < 4 || p.g != genus(p.d)) throw FormatError("payload", "g does not match the degree");
    const AdjointBasis basis(p.d);
    for (std::size_t c = 0; c < p.column_labels.size(); ++c) {
        const auto index = monomial_index(p.column_labels[c], basis);
        if (!index || static_cast<int>(*index) != p.column_indices[c])
            throw FormatError("payload", "column index does not match label " + to_string(p.column_labels[c]));
    }
    return p;
}

VerifyResult verify(const CompressedPeriods& payload, const ComplexMatrix& candidate, int candidate_d,
                    const std::optional<std::vector<Monomial>>& candidate_labels) {
    if (candidate_d != payload.d)
        throw MetadataMismatch("verify", "payload is for degree " + std::to_string(payload.d) + ", candidate for " +
                                             std::to_string(candidate_d));
    if (candidate.rows() != payload.g || candidate.cols() != payload.g)
        throw MetadataMismatch("verify", "payload has g = " + std::to_string(payload.g) + ", candidate is " +
                                             std::to_string(candidate.rows()) + "x" + std::to_string(candidate.cols()));
    const std::vector<Monomial> labels =
        candidate_labels ? *candidate_labels : adjoint_monomials(std::max(candidate_d, 3)).monomials();
    if (static_cast<Eigen::Index>(labels.size()) != candidate.cols())
        throw MetadataMismatch("verify", "candidate basis labels do not match its size");

    VerifyResult r;
    for (std::size_t c = 0; c < payload.column_labels.size(); ++c) {
        const Monomial label = payload.column_labels[c];
        const auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) throw MetadataMismatch("verify", "candidate has no column " + to_string(label));
        const auto col = static_cast<Eigen::Index>(it - labels.begin());
        for (int i = 0; i < payload.g; ++i) {
            const cplx diff = payload.columns[c][static_cast<std::size_t>(i)] - candidate(i, col);
            double dev = std::max(std::abs(diff.real()), std::abs(diff.imag()));
            if (std::isnan(dev)) dev = std::numeric_limits<double>::infinity();
            if (dev > r.max_deviation || r.worst_row < 0) {
                r.max_deviation = dev;
                r.worst_row = i;
                r.worst_label = label;
            }
        }
    }
    r.accept = r.max_deviation <= payload.tolerance;
    r.warnings.push_back("the candidate matrix is not tested for coming from a smooth plane curve");
    return r;
}

}  // namespace planeperiods
