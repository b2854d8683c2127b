#include "acbm/manifold_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

#include "acbm/errors.hpp"

namespace acbm {

namespace {

std::string strip_comment_and_trim(const std::string& raw) {
    std::string s = raw.substr(0, raw.find('#'));
    const char* ws = " \t\r\n";
    const std::size_t first = s.find_first_not_of(ws);
    if (first == std::string::npos) return {};
    const std::size_t last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

std::size_t parse_index(const std::string& tok, std::size_t line_no) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected a nonnegative integer, got '" + tok + "'");
    return value;
}

Rational parse_rational_or_throw(const std::string& tok, std::size_t line_no) {
    const std::optional<Rational> r = parse_rational(tok);
    if (!r) throw ParseError(line_no, "bad rational literal '" + tok + "'");
    return *r;
}

bool bracket_less(const BracketEntry& a, const BracketEntry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
}

void append_vector_line(std::string& out, const RatVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += to_string(v[i]);
    }
    out += '\n';
}

}  // namespace

ManifoldDescription parse_manifold(const std::string& text) {
    enum class Section { None, Brackets, Metric, Phi, Xi, Eta };

    ManifoldDescription d;
    Section section = Section::None;
    bool have_dim = false, have_brackets = false, have_metric = false, have_phi = false,
         have_xi = false, have_eta = false;
    std::size_t metric_rows = 0, phi_rows = 0;
    bool xi_read = false, eta_read = false;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip_comment_and_trim(raw);
        if (line.empty()) continue;
        const std::vector<std::string> toks = tokens_of(line);
        const std::string& head = toks.front();

        if (head == "DIM") {
            if (have_dim) throw ParseError(line_no, "duplicate DIM");
            if (toks.size() != 2) throw ParseError(line_no, "DIM takes exactly one value");
            d.dim = parse_index(toks[1], line_no);
            if (d.dim < 3 || d.dim % 2 == 0)
                throw ValidationError("dimension must be odd and at least 3, got " +
                                      std::to_string(d.dim));
            have_dim = true;
            section = Section::None;
            continue;
        }
        if (head == "LABEL") {
            d.label = strip_comment_and_trim(line.substr(5));
            section = Section::None;
            continue;
        }

        const bool is_section = head == "BRACKETS" || head == "METRIC" || head == "PHI" ||
                                head == "XI" || head == "ETA";
        if (is_section) {
            if (toks.size() != 1) throw ParseError(line_no, head + " takes no values on its line");
            if (!have_dim) throw ParseError(line_no, "DIM must precede " + head);
            if (head == "BRACKETS") {
                if (have_brackets) throw ParseError(line_no, "duplicate BRACKETS");
                have_brackets = true;
                section = Section::Brackets;
            } else if (head == "METRIC") {
                if (have_metric) throw ParseError(line_no, "duplicate METRIC");
                have_metric = true;
                d.metric = RatMatrix(d.dim, d.dim);
                section = Section::Metric;
            } else if (head == "PHI") {
                if (have_phi) throw ParseError(line_no, "duplicate PHI");
                have_phi = true;
                d.phi = RatMatrix(d.dim, d.dim);
                section = Section::Phi;
            } else if (head == "XI") {
                if (have_xi) throw ParseError(line_no, "duplicate XI");
                have_xi = true;
                section = Section::Xi;
            } else {
                if (have_eta) throw ParseError(line_no, "duplicate ETA");
                have_eta = true;
                section = Section::Eta;
            }
            continue;
        }

        switch (section) {
            case Section::None:
                throw ParseError(line_no, "expected a section keyword, got '" + head + "'");
            case Section::Brackets: {
                if (toks.size() != 4)
                    throw ParseError(line_no, "bracket entries read 'i j k value'");
                BracketEntry e;
                e.i = parse_index(toks[0], line_no);
                e.j = parse_index(toks[1], line_no);
                e.k = parse_index(toks[2], line_no);
                e.value = parse_rational_or_throw(toks[3], line_no);
                if (e.i >= d.dim || e.j >= d.dim || e.k >= d.dim)
                    throw ValidationError("bracket index out of range on line " +
                                          std::to_string(line_no));
                if (e.i >= e.j)
                    throw ValidationError("bracket entries require i < j (line " +
                                          std::to_string(line_no) + ")");
                if (e.value != 0) d.brackets.push_back(std::move(e));
                break;
            }
            case Section::Metric:
            case Section::Phi: {
                RatMatrix& m = section == Section::Metric ? d.metric : d.phi;
                std::size_t& rows = section == Section::Metric ? metric_rows : phi_rows;
                if (rows == d.dim)
                    throw ParseError(line_no, "too many rows in this section");
                if (toks.size() != d.dim)
                    throw ParseError(line_no, "expected " + std::to_string(d.dim) +
                                                  " entries, got " + std::to_string(toks.size()));
                for (std::size_t j = 0; j < d.dim; ++j)
                    m(rows, j) = parse_rational_or_throw(toks[j], line_no);
                ++rows;
                break;
            }
            case Section::Xi:
            case Section::Eta: {
                RatVector& v = section == Section::Xi ? d.xi : d.eta;
                bool& read = section == Section::Xi ? xi_read : eta_read;
                if (read) throw ParseError(line_no, "this section takes a single line");
                if (toks.size() != d.dim)
                    throw ParseError(line_no, "expected " + std::to_string(d.dim) +
                                                  " entries, got " + std::to_string(toks.size()));
                v.resize(d.dim);
                for (std::size_t j = 0; j < d.dim; ++j)
                    v[j] = parse_rational_or_throw(toks[j], line_no);
                read = true;
                break;
            }
        }
    }

    if (!have_dim) throw ParseError(line_no, "missing DIM");
    if (!have_metric || metric_rows != d.dim)
        throw ParseError(line_no, "METRIC section missing or incomplete");
    if (!have_phi || phi_rows != d.dim)
        throw ParseError(line_no, "PHI section missing or incomplete");
    if (!have_xi || !xi_read) throw ParseError(line_no, "XI section missing or incomplete");
    if (!have_eta || !eta_read) throw ParseError(line_no, "ETA section missing or incomplete");

    if (!d.metric.is_symmetric()) throw ValidationError("metric is not symmetric");

    std::sort(d.brackets.begin(), d.brackets.end(), bracket_less);
    for (std::size_t a = 1; a < d.brackets.size(); ++a)
        if (!bracket_less(d.brackets[a - 1], d.brackets[a]))
            throw ValidationError("duplicate bracket entry (" + std::to_string(d.brackets[a].i) +
                                  "," + std::to_string(d.brackets[a].j) + "," +
                                  std::to_string(d.brackets[a].k) + ")");
    return d;
}

std::string serialize_manifold(const ManifoldDescription& desc) {
    std::string out = "DIM " + std::to_string(desc.dim) + "\n";
    if (!desc.label.empty()) out += "LABEL " + desc.label + "\n";

    std::vector<BracketEntry> brackets = desc.brackets;
    std::sort(brackets.begin(), brackets.end(), bracket_less);
    out += "BRACKETS\n";
    for (const BracketEntry& e : brackets) {
        if (e.value == 0) continue;
        out += std::to_string(e.i) + " " + std::to_string(e.j) + " " + std::to_string(e.k) + " " +
               to_string(e.value) + "\n";
    }

    for (const char* name : {"METRIC", "PHI"}) {
        const RatMatrix& m = name[0] == 'M' ? desc.metric : desc.phi;
        out += name;
        out += '\n';
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (j) out += ' ';
                out += to_string(m(i, j));
            }
            out += '\n';
        }
    }

    out += "XI\n";
    append_vector_line(out, desc.xi);
    out += "ETA\n";
    append_vector_line(out, desc.eta);
    return out;
}

ManifoldDescription load_manifold(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifold(buf.str());
}

ManifoldDescription example_sasaki5(const Rational& p, const Rational& q) {
    ManifoldDescription d;
    d.dim = 5;
    d.label = "sasaki5 p=" + to_string(p) + " q=" + to_string(q);

    const Rational one(1);
    const BracketEntry raw[] = {
        {0, 1, 2, p},  {0, 1, 3, one}, {0, 1, 4, q},  {0, 2, 1, -p},
        {0, 2, 3, -q}, {0, 2, 4, one}, {0, 3, 1, -one}, {0, 3, 2, -q},
        {0, 3, 4, p},  {0, 4, 1, q},  {0, 4, 2, -one}, {0, 4, 3, -p},
    };
    for (const BracketEntry& e : raw)
        if (e.value != 0) d.brackets.push_back(e);

    d.metric = RatMatrix(5, 5);
    for (std::size_t i = 0; i < 5; ++i) d.metric(i, i) = i < 3 ? 1 : -1;

    d.phi = RatMatrix(5, 5);
    d.phi(3, 1) = 1;
    d.phi(4, 2) = 1;
    d.phi(1, 3) = -1;
    d.phi(2, 4) = -1;

    d.xi = RatVector(5, Rational(0));
    d.xi[0] = 1;
    d.eta = d.xi;
    return d;
}

AlmostContactBMetricStructure build_structure(const ManifoldDescription& desc) {
    DenseTensor c(desc.dim, {Variance::Upper, Variance::Lower, Variance::Lower});
    for (const BracketEntry& e : desc.brackets) {
        c(e.k, e.i, e.j) = e.value;
        c(e.k, e.j, e.i) = -e.value;
    }
    return AlmostContactBMetricStructure(
        LieAlgebra(desc.dim, std::move(c)), MetricTensor(desc.metric),
        tensor_from_matrix(desc.phi, Variance::Upper, Variance::Lower), desc.xi, desc.eta);
}

}  // namespace acbm
