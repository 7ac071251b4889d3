// Copyright 2026 The geomur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "geomur/error.hpp"
#include "geomur/serialization.hpp"
#include "test_support.hpp"

using namespace geomur;
using nlohmann::json;

namespace {

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no geomur::Error thrown";
    return ErrorCode::ParseError;
}

} // namespace

TEST(Serialization, DensityMatrixRoundTripIsExact) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto rho = geomur::testing::random_state(2 + seed % 6, seed);
        const json j = json::parse(to_json(rho).dump());
        const auto back = density_matrix_from_json(j);
        EXPECT_EQ(back.matrix(), rho.matrix());
    }
}

TEST(Serialization, PureStateAndObservableRoundTrip) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = 2 + seed % 6;
        const auto psi = sample_pure(n, seed);
        EXPECT_EQ(pure_state_from_json(json::parse(to_json(psi).dump())).amplitudes(),
                  psi.amplitudes());
        const auto obs = sample_observable(n, seed);
        EXPECT_EQ(observable_from_json(json::parse(to_json(obs).dump())).eigenbasis(),
                  obs.eigenbasis());
    }
}

TEST(Serialization, PureStateDocumentAcceptedAsDensityMatrix) {
    const json j = json::parse(R"({"type":"pure_state","dim":2,"amplitudes":[[0.6,0],[0,0.8]]})");
    const auto rho = density_matrix_from_json(j);
    EXPECT_NEAR(rho.matrix()(0, 0).real(), 0.36, 1e-15);
    EXPECT_NEAR(rho.matrix()(1, 1).real(), 0.64, 1e-15);
    EXPECT_NEAR(std::abs(rho.matrix()(0, 1) - Complex(0.0, -0.48)), 0.0, 1e-15);
}

TEST(Serialization, ObservableColumnsAreEigenvectors) {
    const json j = json::parse(
        R"({"type":"observable","dim":2,"eigenbasis":[[[0,0],[1,0]],[[1,0],[0,0]]]})");
    const auto obs = observable_from_json(j);
    EXPECT_EQ(obs.eigenvector(0), (ComplexVector{0.0, 1.0}));
}

TEST(Serialization, URReportHasExactlySevenFields) {
    const URReport r{0.9, 0.8, 0.1, 0.2, 0.5, 0.3, 0.0};
    const json j = to_json(r);
    ASSERT_EQ(j.size(), 7U);
    for (const char *key : {"p_max_a", "p_max_b", "u_a", "u_b", "overlap_c", "bound", "slack"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(ur_report_from_json(json::parse(j.dump())), r);
}

TEST(Serialization, ParseErrors) {
    EXPECT_EQ(code_of([] { (void)density_matrix_from_json(json::parse("[1,2]")); }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] {
                  (void)density_matrix_from_json(
                      json::parse(R"({"type":"density_matrix","matrix":[[[1,0],[0,0]]]})"));
              }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] {
                  (void)density_matrix_from_json(
                      json::parse(R"({"type":"density_matrix","dim":3,"matrix":[[[1,0]]]})"));
              }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] {
                  (void)density_matrix_from_json(
                      json::parse(R"({"type":"density_matrix","matrix":[[[1,"x"]]]})"));
              }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] {
                  (void)pure_state_from_json(json::parse(R"({"type":"observable"})"));
              }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { (void)ur_report_from_json(json::parse(R"({"p_max_a":1})")); }),
              ErrorCode::ParseError);
}

TEST(Serialization, PhysicsErrorsComeFromValidation) {
    EXPECT_EQ(code_of([] {
                  (void)density_matrix_from_json(json::parse(
                      R"({"type":"density_matrix","matrix":[[[0.5,0],[0,0]],[[0,0],[0.4,0]]]})"));
              }),
              ErrorCode::InvalidState);
    EXPECT_EQ(code_of([] {
                  (void)density_matrix_from_json(json::parse(
                      R"({"type":"density_matrix","matrix":[[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]})"));
              }),
              ErrorCode::NotPSD);
}

TEST(Serialization, FileIo) {
    const auto dir = std::filesystem::temp_directory_path() / "geomur_serialization_test";
    std::filesystem::create_directories(dir);
    const std::string good = (dir / "rho.json").string();
    write_text_file(good, to_json(DensityMatrix::maximally_mixed(3)).dump());
    EXPECT_EQ(density_matrix_from_json(read_json_file(good)).matrix(),
              DensityMatrix::maximally_mixed(3).matrix());

    const std::string bad = (dir / "bad.json").string();
    write_text_file(bad, "{not json");
    EXPECT_EQ(code_of([&] { (void)read_json_file(bad); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([&] { (void)read_json_file((dir / "missing.json").string()); }),
              ErrorCode::IoError);
    std::filesystem::remove_all(dir);
}
