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

#include "geomur/serialization.hpp"

#include <fstream>
#include <sstream>

#include "geomur/error.hpp"

namespace geomur {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(ErrorCode::ParseError, "complex entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

void expect_type(const json &j, const char *type) {
    if (!j.is_object() || !j.contains("type") || j["type"] != type)
        throw Error(ErrorCode::ParseError, std::string("expected a \"") + type + "\" document");
}

void check_dim(const json &j, std::size_t actual) {
    if (j.contains("dim") && (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() != actual))
        throw Error(ErrorCode::ParseError, "\"dim\" does not match the data");
}

const json &field(const json &j, const char *name) {
    if (!j.contains(name))
        throw Error(ErrorCode::ParseError, std::string("missing field \"") + name + "\"");
    return j[name];
}

double number_field(const json &j, const char *name) {
    const json &v = field(j, name);
    if (!v.is_number())
        throw Error(ErrorCode::ParseError, std::string("field \"") + name + "\" must be a number");
    return v.get<double>();
}

} // namespace

json to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.dim(); ++k)
            row.push_back(complex_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const DensityMatrix &rho) {
    return {{"type", "density_matrix"}, {"dim", rho.dim()}, {"matrix", to_json(rho.matrix())}};
}

json to_json(const PureState &psi) {
    json amps = json::array();
    for (const auto &z : psi.amplitudes())
        amps.push_back(complex_to_json(z));
    return {{"type", "pure_state"}, {"dim", psi.dim()}, {"amplitudes", std::move(amps)}};
}

json to_json(const ProjectiveObservable &obs) {
    return {{"type", "observable"}, {"dim", obs.dim()}, {"eigenbasis", to_json(obs.eigenbasis())}};
}

json to_json(const URReport &r) {
    return {{"p_max_a", r.p_max_a}, {"p_max_b", r.p_max_b}, {"u_a", r.u_a},
            {"u_b", r.u_b},         {"overlap_c", r.overlap_c}, {"bound", r.bound},
            {"slack", r.slack}};
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_array() || j.empty())
        throw Error(ErrorCode::ParseError, "matrix must be a non-empty array of rows");
    const std::size_t n = j.size();
    std::vector<Complex> data;
    data.reserve(n * n);
    for (const auto &row : j) {
        if (!row.is_array() || row.size() != n)
            throw Error(ErrorCode::ParseError, "matrix must be square");
        for (const auto &z : row)
            data.push_back(complex_from_json(z));
    }
    return ComplexMatrix(n, std::move(data));
}

PureState pure_state_from_json(const json &j) {
    expect_type(j, "pure_state");
    const json &amps = field(j, "amplitudes");
    if (!amps.is_array() || amps.empty())
        throw Error(ErrorCode::ParseError, "amplitudes must be a non-empty array");
    ComplexVector v;
    for (const auto &z : amps)
        v.push_back(complex_from_json(z));
    check_dim(j, v.size());
    return PureState(std::move(v));
}

DensityMatrix density_matrix_from_json(const json &j) {
    if (j.is_object() && j.contains("type") && j["type"] == "pure_state")
        return DensityMatrix::from_pure(pure_state_from_json(j));
    expect_type(j, "density_matrix");
    ComplexMatrix m = matrix_from_json(field(j, "matrix"));
    check_dim(j, m.dim());
    return DensityMatrix(m);
}

ProjectiveObservable observable_from_json(const json &j) {
    expect_type(j, "observable");
    ComplexMatrix m = matrix_from_json(field(j, "eigenbasis"));
    check_dim(j, m.dim());
    return ProjectiveObservable(std::move(m));
}

URReport ur_report_from_json(const json &j) {
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "URReport must be an object");
    URReport r;
    r.p_max_a = number_field(j, "p_max_a");
    r.p_max_b = number_field(j, "p_max_b");
    r.u_a = number_field(j, "u_a");
    r.u_b = number_field(j, "u_b");
    r.overlap_c = number_field(j, "overlap_c");
    r.bound = number_field(j, "bound");
    r.slack = number_field(j, "slack");
    return r;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path);
    out << text;
    if (!out)
        throw Error(ErrorCode::IoError, "write failed for " + path);
}

} // namespace geomur
