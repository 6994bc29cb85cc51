#include <gtest/gtest.h>

#include <random>

#include "planeperiods/compress.hpp"
#include "planeperiods/config.hpp"
#include "planeperiods/error.hpp"
#include "planeperiods/json_io.hpp"

using namespace planeperiods;

namespace {

// Random symmetric matrix with positive-definite imaginary part.
ComplexMatrix siegel(int g, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    Eigen::MatrixXd X(g, g), Y(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            X(i, j) = u(rng);
            Y(i, j) = u(rng);
        }
    const Eigen::MatrixXd re = (X + X.transpose()) / 2;
    const Eigen::MatrixXd im = Y * Y.transpose() + Eigen::MatrixXd::Identity(g, g);
    ComplexMatrix m(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) m(i, j) = cplx(re(i, j), im(i, j));
    return m;
}

}  // namespace

TEST(Json, CanonicalDumpRoundTripsDoubles) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int k = 0; k < 200; ++k) {
        const cplx z(u(rng), u(rng) * 1e-200);
        const Json back = Json::parse(dump_canonical(to_json(z)));
        EXPECT_EQ(complex_from_json(back), z);
    }
    Json j;
    j["b"] = 1.0;
    j["a"] = 2;
    EXPECT_EQ(dump_canonical(j), "{\n  \"b\": 1.0,\n  \"a\": 2\n}\n");
}

TEST(Compress, RatioIsFourColumnsOverUpperTriangle) {
    for (int d = 7; d <= 9; ++d) {
        const int g = genus(d);
        const CompressedPeriods p = compress(siegel(g, static_cast<unsigned>(d)), d, distinguished_columns(d).columns, 1e-8);
        const CompressionRatio r = compression_ratio(p);
        EXPECT_EQ(r.payload_entries * (g + 1), 8LL * r.full_entries);
    }
    const CompressedPeriods p6 = compress(siegel(10, 1), 6, distinguished_columns(6).columns, 1e-8);
    EXPECT_EQ(compression_ratio(p6).payload_entries, 40);
    EXPECT_EQ(compression_ratio(p6).full_entries, 55);
}

TEST(Compress, ColumnsCopyOmegaByLabel) {
    const ComplexMatrix omega = siegel(15, 2);
    const CompressedPeriods p = compress(omega, 7, distinguished_columns(7).columns, 1e-8);
    const AdjointBasis basis(7);
    for (std::size_t c = 0; c < p.column_labels.size(); ++c) {
        EXPECT_EQ(basis[static_cast<std::size_t>(p.column_indices[c])], p.column_labels[c]);
        for (int i = 0; i < 15; ++i) EXPECT_EQ(p.columns[c][static_cast<std::size_t>(i)], omega(i, p.column_indices[c]));
    }
}

TEST(Compress, RejectsBadInput) {
    const ComplexMatrix omega = siegel(10, 3);
    EXPECT_THROW(compress(omega, 7, distinguished_columns(7).columns, 1e-8), InvalidArgument);
    EXPECT_THROW(compress(omega, 6, ColumnSet(6, parse_monomial_list("1,x^3,y^3")), 1e-8), InvalidArgument);
    EXPECT_THROW(compress(omega, 6, distinguished_columns(6).columns, 0), InvalidArgument);
}

TEST(Payload, SerializeRoundTripIsExact) {
    const CompressedPeriods p = compress(siegel(10, 4), 6, distinguished_columns(6).columns, 1e-8);
    const std::string bytes = serialize(p);
    EXPECT_EQ(deserialize(bytes), p);
    EXPECT_EQ(serialize(deserialize(bytes)), bytes);
    const Json doc = Json::parse(bytes);
    EXPECT_EQ(doc.begin().key(), "format_version");
    EXPECT_EQ(doc["checksum"].get<std::string>().size(), 8u);
}

TEST(Payload, AnySingleByteChangeIsDetected) {
    const std::string bytes = serialize(compress(siegel(6, 5), 5, distinguished_columns(5).columns, 1e-8));
    for (std::size_t pos = 0; pos < bytes.size(); pos += 7) {
        std::string bad = bytes;
        bad[pos] = bad[pos] == '1' ? '2' : '1';
        EXPECT_THROW(deserialize(bad), FormatError) << pos;
    }
}

TEST(Payload, UnknownVersionIsFormatError) {
    CompressedPeriods p = compress(siegel(6, 6), 5, distinguished_columns(5).columns, 1e-8);
    p.format_version = 2;
    EXPECT_THROW(deserialize(serialize(p)), FormatError);
}

TEST(Payload, IndexLabelMismatchIsFormatError) {
    CompressedPeriods p = compress(siegel(6, 6), 5, distinguished_columns(5).columns, 1e-8);
    std::swap(p.column_indices[0], p.column_indices[1]);
    EXPECT_THROW(deserialize(serialize(p)), FormatError);
}

TEST(Verify, AcceptsOwnMatrixAndReportsWarning) {
    const ComplexMatrix omega = siegel(10, 7);
    const auto p = deserialize(serialize(compress(omega, 6, distinguished_columns(6).columns, 1e-8)));
    const VerifyResult v = verify(p, omega, 6);
    EXPECT_TRUE(v.accept);
    EXPECT_EQ(v.max_deviation, 0.0);
    EXPECT_FALSE(v.warnings.empty());
}

TEST(Verify, SinglePerturbationLocated) {
    const ComplexMatrix omega = siegel(10, 8);
    const auto cols = distinguished_columns(6).columns;
    const auto p = compress(omega, 6, cols, 1e-8);
    const AdjointBasis basis(6);
    for (Monomial label : cols.labels()) {
        const auto col = static_cast<Eigen::Index>(*monomial_index(label, basis));
        for (int row : {0, 4, 9}) {
            ComplexMatrix bad = omega;
            bad(row, col) += cplx(0, 1e-4);
            const VerifyResult v = verify(p, bad, 6);
            EXPECT_FALSE(v.accept);
            EXPECT_EQ(v.worst_row, row);
            EXPECT_EQ(v.worst_label, label);
            EXPECT_NEAR(v.max_deviation, 1e-4, 1e-12);
        }
    }
    // outside the payload columns nothing is seen
    ComplexMatrix off = omega;
    off(2, 1) += 1.0;
    EXPECT_TRUE(verify(p, off, 6).accept == !cols.contains(basis[1]));
}

TEST(Verify, MonotoneInTolerance) {
    const ComplexMatrix omega = siegel(6, 9);
    ComplexMatrix cand = omega;
    cand(3, 0) += 3e-7;
    for (double t : {1e-8, 1e-7, 3e-7, 1e-6, 1e-5}) {
        const bool accept = verify(compress(omega, 5, distinguished_columns(5).columns, t), cand, 5).accept;
        for (double t2 : {t * 1.5, t * 10})
            if (accept) EXPECT_TRUE(verify(compress(omega, 5, distinguished_columns(5).columns, t2), cand, 5).accept);
    }
}

TEST(Verify, TransposeOfSymmetricMatrixAccepts) {
    ComplexMatrix omega = siegel(10, 10);
    omega(1, 3) += cplx(1e-10, 0);  // slightly asymmetric, within tolerance
    const auto p = compress(omega, 6, distinguished_columns(6).columns, 1e-8);
    EXPECT_TRUE(verify(p, omega.transpose(), 6).accept);
}

TEST(Verify, NanIsRejected) {
    ComplexMatrix omega = siegel(6, 11);
    const auto p = compress(omega, 5, distinguished_columns(5).columns, 1e-3);
    omega(0, 0) = cplx(std::nan(""), 0);
    EXPECT_FALSE(verify(p, omega, 5).accept);
}

TEST(Verify, MetadataMismatch) {
    const ComplexMatrix omega = siegel(10, 12);
    const auto p = compress(omega, 6, distinguished_columns(6).columns, 1e-8);
    EXPECT_THROW(verify(p, siegel(15, 1), 7), MetadataMismatch);
    EXPECT_THROW(verify(p, siegel(6, 1), 6), MetadataMismatch);
}

TEST(Verify, PermutedCandidateBasisUsesLabels) {
    const ComplexMatrix omega = siegel(10, 13);
    const auto p = compress(omega, 6, distinguished_columns(6).columns, 1e-8);
    std::vector<Monomial> labels = AdjointBasis(6).monomials();
    std::vector<int> order(10);
    for (int i = 0; i < 10; ++i) order[static_cast<std::size_t>(i)] = 9 - i;
    ComplexMatrix permuted(10, 10);
    std::vector<Monomial> permuted_labels;
    for (int c = 0; c < 10; ++c) {
        permuted.col(c) = omega.col(order[static_cast<std::size_t>(c)]);
        permuted_labels.push_back(labels[static_cast<std::size_t>(order[static_cast<std::size_t>(c)])]);
    }
    EXPECT_TRUE(verify(p, permuted, 6, permuted_labels).accept);
    EXPECT_FALSE(verify(p, permuted, 6).accept);
}

TEST(Config, DefaultsValidateAndRoundTrip) {
    const Config c;
    EXPECT_NO_THROW(c.validate());
    const Config back = config_from_json(to_json(c));
    EXPECT_EQ(to_json(back), to_json(c));
}

TEST(Config, InvalidValues) {
    Config c;
    c.quad_tol = 0;
    EXPECT_THROW(c.validate(), InvalidArgument);
    c = Config{};
    c.degree_cap = 4;
    EXPECT_THROW(c.validate(), InvalidArgument);
    c = Config{};
    c.format = "xml";
    EXPECT_THROW(c.validate(), InvalidArgument);
    EXPECT_THROW(config_from_json(Json::parse(R"({"bogus": 1})")), FormatError);
    EXPECT_THROW(config_from_json(Json::parse(R"({"quad_tol": "small"})")), FormatError);
}

TEST(Config, PartialDocumentKeepsBase) {
    Config base;
    base.seed = 42;
    const Config c = config_from_json(Json::parse(R"({"quad_tol": 1e-12, "format_version": 1})"), base);
    EXPECT_EQ(c.quad_tol, 1e-12);
    EXPECT_EQ(c.seed, 42u);
    EXPECT_EQ(c.period_options().quad_tol, 1e-12);
}
