// Copyright 2026 The ncdomain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ncd/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ncd/errors.hpp"

namespace ncd {

namespace {

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError("expected a [re, im] pair, got " + j.dump());
    return {j[0].get<double>(), j[1].get<double>()};
}

Json block_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_pair(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix block_from_json(const Json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) throw ValidationError("symbol block must have aux_dim rows");
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != dim)
            throw ValidationError("symbol block must have aux_dim columns");
        for (int k = 0; k < dim; ++k) m(i, k) = complex_from(j[i][k]);
    }
    return m;
}

Json word_to_json(const Word& w) {
    Json arr = Json::array();
    for (Letter l : w.letters()) arr.push_back(static_cast<int>(l));
    return arr;
}

Word word_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("word must be an array of letters, got " + j.dump());
    std::vector<Letter> letters;
    for (const auto& l : j) {
        if (!l.is_number_integer() || l.get<int>() < 1 || l.get<int>() > 255)
            throw ValidationError("letters are integers in 1..255, got " + l.dump());
        letters.push_back(static_cast<Letter>(l.get<int>()));
    }
    return Word(std::move(letters));
}

int required_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw ValidationError(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

}  // namespace

Rational parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw ValidationError("empty rational");
    try {
        if (text.find('/') != std::string::npos) {
            Rational q(text, 10);
            if (q.get_den() == 0) throw ValidationError("zero denominator in '" + raw + "'");
            q.canonicalize();
            return q;
        }
        std::string mantissa = text;
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string::npos) {
            mantissa = text.substr(0, e);
            exponent = std::stol(text.substr(e + 1));
        }
        std::string digits;
        long frac = 0;
        bool seen_dot = false;
        for (std::size_t i = 0; i < mantissa.size(); ++i) {
            const char c = mantissa[i];
            if (c == '.') {
                if (seen_dot) throw ValidationError("malformed number '" + raw + "'");
                seen_dot = true;
            } else if (std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && (c == '-' || c == '+'))) {
                if (c != '+') digits += c;
                if (seen_dot && std::isdigit(static_cast<unsigned char>(c))) ++frac;
            } else {
                throw ValidationError("malformed number '" + raw + "'");
            }
        }
        if (digits.empty() || digits == "-") throw ValidationError("malformed number '" + raw + "'");
        Rational q{mpz_class(digits, 10)};
        const long shift = exponent - frac;
        mpz_class p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
        if (shift >= 0)
            q *= p10;
        else
            q /= p10;
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed number '" + raw + "'");
    }
}

Json matrix_to_json(const Matrix& m, int aux_dim) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["aux_dim"] = aux_dim;
    Json data = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index k = 0; k < m.cols(); ++k) data.push_back(complex_pair(m(i, k)));
    j["data"] = std::move(data);
    return j;
}

Matrix matrix_from_json(const Json& j, int* aux_dim) {
    if (!j.is_object()) throw ValidationError("matrix must be a JSON object");
    const int rows = required_int(j, "rows");
    const int cols = required_int(j, "cols");
    if (rows < 0 || cols < 0) throw ValidationError("matrix dimensions must be nonnegative");
    const int aux = j.contains("aux_dim") ? required_int(j, "aux_dim") : 1;
    if (aux < 1) throw ValidationError("aux_dim must be >= 1");
    if (aux_dim) *aux_dim = aux;
    if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != static_cast<std::size_t>(rows) * cols)
        throw ValidationError("matrix data must hold rows * cols entries");
    Matrix m(rows, cols);
    const Json& data = j["data"];
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) m(i, k) = complex_from(data[static_cast<std::size_t>(i) * cols + k]);
    return m;
}

Json operator_to_json(const TruncatedOperator& t) { return matrix_to_json(t.matrix, t.aux_dim); }

TruncatedOperator operator_from_json(const Json& j, int n) {
    int aux = 1;
    Matrix m = matrix_from_json(j, &aux);
    if (m.rows() != m.cols() || m.rows() % aux != 0) throw ValidationError("operator matrix must be square with aux_dim blocks");
    const auto D = static_cast<std::size_t>(m.rows() / aux);
    for (int N = 0; word_count(n, N) <= D; ++N) {
        if (word_count(n, N) == D) return TruncatedOperator(FockBasis(n, N), aux, std::move(m));
        if (n == 1 && N > static_cast<int>(D)) break;
    }
    throw ValidationError("operator dimension " + std::to_string(D) + " is not a truncated Fock dimension for n = " +
                          std::to_string(n));
}

Json symbol_to_json(const MultiToeplitzSymbol& s) {
    Json j;
    j["aux_dim"] = s.aux_dim;
    auto part = [](const std::map<Word, Matrix>& p) {
        Json arr = Json::array();
        for (const auto& [w, blk] : p) {
            Json e;
            e["word"] = word_to_json(w);
            e["block"] = block_to_json(blk);
            arr.push_back(std::move(e));
        }
        return arr;
    };
    j["A"] = part(s.A);
    j["B"] = part(s.B);
    return j;
}

MultiToeplitzSymbol symbol_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("symbol must be a JSON object");
    MultiToeplitzSymbol s;
    s.aux_dim = j.contains("aux_dim") ? required_int(j, "aux_dim") : 1;
    if (s.aux_dim < 1) throw ValidationError("aux_dim must be >= 1");
    auto part = [&](const char* key, std::map<Word, Matrix>& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_array()) throw ValidationError(std::string("symbol field '") + key + "' must be an array");
        for (const auto& e : j[key]) {
            if (!e.contains("word") || !e.contains("block")) throw ValidationError("symbol entries need 'word' and 'block'");
            const Word w = word_from_json(e["word"]);
            if (out.count(w)) throw ValidationError("duplicate symbol word " + w.to_string());
            out[w] = block_from_json(e["block"], s.aux_dim);
        }
    };
    part("A", s.A);
    part("B", s.B);
    s.validate();
    return s;
}

Json tuple_to_json(const OperatorTuple& x) {
    Json j;
    j["n"] = x.n();
    j["dim"] = x.dim();
    Json ms = Json::array();
    for (const auto& m : x.ops) ms.push_back(matrix_to_json(m));
    j["matrices"] = std::move(ms);
    return j;
}

OperatorTuple tuple_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("tuple must be a JSON object");
    const int n = required_int(j, "n");
    const int dim = required_int(j, "dim");
    if (!j.contains("matrices") || !j["matrices"].is_array() || static_cast<int>(j["matrices"].size()) != n)
        throw ValidationError("tuple needs n matrices");
    std::vector<Matrix> ms;
    for (const auto& mj : j["matrices"]) {
        Matrix m = matrix_from_json(mj);
        if (m.rows() != dim || m.cols() != dim) throw ValidationError("tuple matrices must be dim x dim");
        ms.push_back(std::move(m));
    }
    try {
        return OperatorTuple(std::move(ms));
    } catch (const DimensionMismatch& e) {
        throw ValidationError(e.what());
    }
}

Json spec_to_json(const DomainSpec& spec) {
    Json j;
    j["n"] = spec.n;
    j["m"] = spec.m;
    Json cs = Json::array();
    for (const auto& [w, a] : spec.coefficients) {
        Json e;
        e["word"] = word_to_json(w);
        e["value"] = a.get_str();
        cs.push_back(std::move(e));
    }
    j["coefficients"] = std::move(cs);
    return j;
}

DomainSpec spec_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("spec must be a JSON object");
    const int n = required_int(j, "n");
    const int m = required_int(j, "m");
    DomainSpec spec;
    if (j.contains("kind")) {
        if (j["kind"] != "hyperball") throw ValidationError("unknown spec kind " + j["kind"].dump());
        spec = DomainSpec::hyperball(n, m);
    } else {
        spec.n = n;
        spec.m = m;
        if (!j.contains("coefficients") || !j["coefficients"].is_array())
            throw ValidationError("spec needs a 'coefficients' array");
        for (const auto& e : j["coefficients"]) {
            if (!e.contains("word") || !e.contains("value")) throw ValidationError("coefficients need 'word' and 'value'");
            const Word w = word_from_json(e["word"]);
            const Json& v = e["value"];
            Rational a;
            if (v.is_string())
                a = parse_rational(v.get<std::string>());
            else if (v.is_number())
                a = parse_rational(v.dump());
            else
                throw ValidationError("coefficient value must be a number or string");
            if (spec.coefficients.count(w)) throw ValidationError("duplicate coefficient word " + w.to_string());
            spec.coefficients[w] = a;
        }
    }
    spec.validate();
    return spec;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace ncd
