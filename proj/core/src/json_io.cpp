#include "ncclark/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ncclark/error.hpp"

namespace ncclark {

static Json indexEntry(const MultiIndex& n, Complex c) {
    Json row = Json::array();
    for (int k : n) row.push_back(k);
    row.push_back(c.real());
    row.push_back(c.imag());
    return row;
}

static std::pair<MultiIndex, Complex> indexEntryFrom(const Json& row, int d) {
    require(row.is_array() && static_cast<int>(row.size()) == d + 2,
            "coefficient entry must be [n_1..n_d, re, im]");
    MultiIndex n(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) n[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k)].get<int>();
    Complex c{row[static_cast<std::size_t>(d)].get<double>(),
              row[static_cast<std::size_t>(d) + 1].get<double>()};
    return {std::move(n), c};
}

Json toJson(const SymElement& p) {
    Json j;
    j["d"] = p.d;
    Json plus = Json::array();
    for (const auto& [n, c] : p.plus) plus.push_back(indexEntry(n, c));
    Json minus = Json::array();
    for (const auto& [n, c] : p.minus) minus.push_back(indexEntry(n, c));
    j["plus"] = std::move(plus);
    j["minus"] = std::move(minus);
    return j;
}

SymElement symElementFromJson(const Json& j) {
    SymElement p(j.at("d").get<int>());
    for (const auto& row : j.at("plus")) {
        auto [n, c] = indexEntryFrom(row, p.d);
        p.addPlus(n, c);
    }
    for (const auto& row : j.at("minus")) {
        auto [n, c] = indexEntryFrom(row, p.d);
        p.addMinus(n, c);
    }
    return p;
}

Json toJson(const TruncatedSeries& s) {
    Json j;
    j["d"] = s.d;
    j["N"] = s.N;
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < s.coeffs.size(); ++i)
        if (s.coeffs[i] != Complex{}) coeffs.push_back(indexEntry(s.basis->at(i), s.coeffs[i]));
    j["coeffs"] = std::move(coeffs);
    return j;
}

TruncatedSeries seriesFromJson(const Json& j) {
    TruncatedSeries s(j.at("d").get<int>(), j.at("N").get<int>());
    for (const auto& row : j.at("coeffs")) {
        auto [n, c] = indexEntryFrom(row, s.d);
        s.set(n, c);
    }
    return s;
}

Json toJson(const MomentState& mu) {
    Json j;
    j["d"] = mu.d;
    j["N"] = mu.N;
    Json moments = Json::array();
    for (std::size_t i = 0; i < mu.moments.size(); ++i)
        if (mu.moments[i] != Complex{})
            moments.push_back(indexEntry(mu.basis->at(i), mu.moments[i]));
    j["moments"] = std::move(moments);
    j["provenance"] = mu.provenance;
    return j;
}

MomentState momentStateFromJson(const Json& j) {
    MomentState mu(j.at("d").get<int>(), j.at("N").get<int>(),
                   j.value("provenance", std::string{}));
    for (const auto& row : j.at("moments")) {
        auto [n, c] = indexEntryFrom(row, mu.d);
        mu.moments[mu.basis->indexOf(n)] = c;
    }
    return mu;
}

Json toJson(const WordState& nu) {
    Json j;
    j["d"] = nu.words.d;
    j["maxLen"] = nu.words.maxLen;
    Json values = Json::array();
    for (std::size_t i = 0; i < nu.values.size(); ++i) {
        if (nu.values[i] == Complex{}) continue;
        Json row = Json::array();
        Json word = Json::array();
        for (int letter : nu.words.basis[i]) word.push_back(letter);
        row.push_back(std::move(word));
        row.push_back(nu.values[i].real());
        row.push_back(nu.values[i].imag());
        values.push_back(std::move(row));
    }
    j["values"] = std::move(values);
    j["provenance"] = nu.provenance;
    return j;
}

WordState wordStateFromJson(const Json& j) {
    WordState nu;
    nu.words = fockBuild(j.at("d").get<int>(), j.at("maxLen").get<int>());
    nu.values.assign(nu.words.size(), Complex{});
    nu.provenance = j.value("provenance", std::string{});
    for (const auto& row : j.at("values")) {
        require(row.is_array() && row.size() == 3, "word entry must be [[letters...], re, im]");
        Word w;
        for (const auto& letter : row[0]) w.push_back(letter.get<int>());
        nu.values[nu.words.rank(w)] = Complex{row[1].get<double>(), row[2].get<double>()};
    }
    return nu;
}

Json matrixToJson(const Eigen::MatrixXcd& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            Json cell = Json::array();
            cell.push_back(m(r, c).real());
            cell.push_back(m(r, c).imag());
            entries.push_back(std::move(cell));
        }
    j["entries"] = std::move(entries);
    return j;
}

Eigen::MatrixXcd matrixFromJson(const Json& j) {
    Eigen::MatrixXcd m(j.at("rows").get<Eigen::Index>(), j.at("cols").get<Eigen::Index>());
    const Json& entries = j.at("entries");
    require(static_cast<Eigen::Index>(entries.size()) == m.rows() * m.cols(),
            "entry count must equal rows*cols");
    Eigen::Index k = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const Json& cell = entries[static_cast<std::size_t>(k++)];
            m(r, c) = Complex{cell[0].get<double>(), cell[1].get<double>()};
        }
    return m;
}

std::string matrixToCsv(const Eigen::MatrixXcd& m) {
    std::ostringstream out;
    out.precision(17);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ',';
            out << m(r, c).real() << ',' << m(r, c).imag();
        }
        out << '\n';
    }
    return out.str();
}

Json conventionsRecord() {
    Json j;
    j["symmetrizedMonomial"] = "L^(n) = sum of L_w over words with letter count n";
    j["resolventPowers"] = "(zL*)^k = sum_{|n|=k} z^n L^(n)*, unit coefficients";
    j["moments"] = "mu(I) = Re a_0; mu(L^(n)) = conj(a_n)/2 for the Herglotz series sum a_n z^n";
    j["gram"] = "G[n,m] = mu(L^(n)* L^(m)); <p,q> = mu(q(L)* p(L))";
    j["monomialOrder"] = "degree-major; within a degree the first exponent decreases first";
    j["wordOrder"] = "length-major, lexicographic within a length";
    j["leastSquaresRegularization"] = 1e-10;
    return j;
}

Json reportSkeleton(const std::string& check) {
    Json j;
    j["schemaVersion"] = 1;
    j["check"] = check;
    j["conventions"] = conventionsRecord();
    return j;
}

void writeJsonFile(const std::string& path, const Json& j) {
    std::ofstream out(path);
    require(out.good(), "cannot open for writing: " + path);
    out << j.dump(2) << '\n';
    require(out.good(), "write failed: " + path);
}

Json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open: " + path);
    Json j = Json::parse(in, nullptr, true, true);
    return j;
}

} // namespace ncclark
