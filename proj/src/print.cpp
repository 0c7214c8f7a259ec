#include "twoloop/print.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace twoloop {

namespace {

std::string exponent_text(std::int64_t doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

std::string magnitude_text(const Rational& c) {
    return (c.sign() < 0 ? (-c) : c).str();
}

constexpr const char* kZeroCell = "·";  // middle dot

std::string pad_left(const std::string& s, std::size_t width, std::size_t display_len) {
    std::string out;
    if (display_len < width) out.assign(width - display_len, ' ');
    return out + s;
}

// Cell display width: the dot is multi-byte UTF-8 but one column wide.
std::size_t display_len(const std::string& s) {
    return s == kZeroCell ? 1 : s.size();
}

}  // namespace

std::string pretty(const LaurentPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const std::string mag = magnitude_text(c);
        if (e == 0) {
            os << mag;
        } else {
            if (mag != "1") os << mag;
            os << "t";
            if (e != 2) os << "^" << exponent_text(e);
        }
    }
    return os.str();
}

std::string render_domain_triples(const ThetaPolynomial& theta) {
    std::ostringstream os;
    for (const auto& cell : fundamental_domain(theta))
        os << cell.n << " " << cell.m << " " << cell.coefficient.str() << "\n";
    return os.str();
}

namespace {

std::string render_matrix(const std::vector<std::string>& row_labels,
                          const std::string& header_label,
                          const std::vector<std::string>& column_headers,
                          const std::vector<std::vector<std::string>>& cells) {
    std::size_t label_width = header_label.size();
    for (const auto& l : row_labels) label_width = std::max(label_width, l.size());
    std::size_t cell_width = 0;
    for (const auto& h : column_headers) cell_width = std::max(cell_width, h.size());
    for (const auto& row : cells)
        for (const auto& c : row) cell_width = std::max(cell_width, display_len(c));

    std::ostringstream os;
    auto emit_row = [&](const std::string& label, const std::vector<std::string>& row) {
        std::string line = label;
        line.append(label_width - label.size(), ' ');
        for (const auto& c : row)
            line += "  " + pad_left(c, cell_width, display_len(c));
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    };
    emit_row(header_label, column_headers);
    os << "\n";
    for (std::size_t i = 0; i < cells.size(); ++i) emit_row(row_labels[i], cells[i]);
    return os.str();
}

}  // namespace

std::string render_grid_table(const ThetaPolynomial& theta) {
    if (theta.is_zero()) return "(zero polynomial)\n";
    if (!theta.has_integer_exponents())
        throw HalfIntegerExponentError("grid rendering requires integer exponents");

    std::int64_t n_min = 0, n_max = 0, m_min = 0, m_max = 0;
    bool first = true;
    for (const auto& [k, c] : theta.terms()) {
        const std::int64_t n = k.first / 2, m = k.second / 2;
        if (first) {
            n_min = n_max = n;
            m_min = m_max = m;
            first = false;
        }
        n_min = std::min(n_min, n); n_max = std::max(n_max, n);
        m_min = std::min(m_min, m); m_max = std::max(m_max, m);
    }

    std::vector<std::string> column_headers;
    for (std::int64_t n = n_min; n <= n_max; ++n)
        column_headers.push_back(std::to_string(n));

    std::vector<std::string> row_labels;
    std::vector<std::vector<std::string>> cells;
    for (std::int64_t m = m_max; m >= m_min; --m) {
        row_labels.push_back("m=" + std::to_string(m));
        std::vector<std::string> row;
        for (std::int64_t n = n_min; n <= n_max; ++n) {
            const Rational c = theta.coefficient(2 * n, 2 * m);
            row.push_back(c.is_zero() ? std::string(kZeroCell) : c.str());
        }
        cells.push_back(std::move(row));
    }
    return render_matrix(row_labels, "n", column_headers, cells);
}

std::string render_domain_table(const ThetaPolynomial& theta) {
    const auto domain = fundamental_domain(theta);
    if (domain.empty()) return "(empty)\n";

    std::int64_t n_max = 0, m_max = 0;
    for (const auto& cell : domain) {
        n_max = std::max(n_max, cell.n);
        m_max = std::max(m_max, cell.m);
    }

    std::size_t cell_width = 1;
    for (const auto& cell : domain)
        cell_width = std::max(cell_width, cell.coefficient.str().size());

    std::ostringstream os;
    for (std::int64_t m = m_max; m >= 0; --m) {
        std::string line;
        for (std::int64_t n = 0; n <= n_max; ++n) {
            std::string cell;
            if (2 * m <= n) {
                const Rational c = theta.coefficient(2 * n, 2 * m);
                cell = c.is_zero() ? std::string(kZeroCell) : c.str();
            }
            if (n > 0) line += "  ";
            line += pad_left(cell, cell_width, display_len(cell));
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

}  // namespace twoloop
