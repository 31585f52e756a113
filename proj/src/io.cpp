#include "orthoframe/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

namespace orthoframe {

namespace {

std::vector<std::vector<double>> parse_rows(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<double> row;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                const double v = std::stod(tok, &used);
                if (used != tok.size() || !std::isfinite(v))
                    throw ParseError("line " + std::to_string(lineno) + ": bad number '" + tok + "'");
                row.push_back(v);
            } catch (const std::logic_error&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad number '" + tok + "'");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Matrix parse_matrix(std::istream& in) {
    const auto rows = parse_rows(in);
    if (rows.empty()) throw ParseError("empty matrix input");
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ParseError("ragged matrix: rows have different lengths");
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

WahbaInput parse_wahba(std::istream& in) {
    const auto rows = parse_rows(in);
    if (rows.empty()) throw ParseError("empty observation input");
    std::vector<VectorObservation> obs;
    std::vector<std::string> warnings;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& r = rows[k];
        if (r.size() != 7)
            throw ParseError("observation " + std::to_string(k + 1) + ": expected 7 reals, got " +
                             std::to_string(r.size()));
        if (!(r[0] > 0.0))
            throw ParseError("observation " + std::to_string(k + 1) + ": weight must be positive");
        VectorObservation o{r[0], {r[1], r[2], r[3]}, {r[4], r[5], r[6]}};
        for (Vector3* v : {&o.ref, &o.obs}) {
            const double n = std::sqrt((*v)[0] * (*v)[0] + (*v)[1] * (*v)[1] + (*v)[2] * (*v)[2]);
            if (n == 0.0)
                throw ParseError("observation " + std::to_string(k + 1) + ": zero vector");
            if (std::fabs(n - 1.0) > 1e-6)
                warnings.push_back("observation " + std::to_string(k + 1) +
                                   ": vector off-unit by " + format_real(std::fabs(n - 1.0), 3) +
                                   ", normalized");
            for (double& x : *v) x /= n;
        }
        obs.push_back(o);
    }
    return {WahbaProblem(std::move(obs)), std::move(warnings)};
}

std::string format_real(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string format_matrix(const Matrix& m, int digits) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += format_real(m(i, j), digits);
        }
        out += '\n';
    }
    return out;
}

}  // namespace orthoframe
