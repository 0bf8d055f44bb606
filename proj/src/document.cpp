#include "rft/document.hpp"

#include <sstream>

namespace rft {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

bool is_keyword(const std::string& tok) {
    return tok == "dims" || tok == "boundary" || tok == "homology" ||
           tok == "pairing" || tok == "labels" || tok == "complex" || tok == "map" ||
           tok == "rft-complex" || tok == "rft-ses";
}

class Cursor {
  public:
    explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

    bool done() const { return pos_ >= lines_.size(); }
    const Line& peek() const { return lines_[pos_]; }
    Line next() { return lines_[pos_++]; }
    std::size_t line_number() const {
        return done() ? (lines_.empty() ? 1 : lines_.back().number + 1)
                      : lines_[pos_].number;
    }

    long degree_arg(const Line& line) const {
        if (line.tokens.size() < 2)
            throw SyntaxError(line.number, line.tokens[0] + " needs a degree");
        try {
            return std::stol(line.tokens[1]);
        } catch (const std::exception&) {
            throw SyntaxError(line.number, "bad degree: " + line.tokens[1]);
        }
    }

    /// Rows until the next keyword line; entries parsed as rationals.
    std::vector<std::vector<Rational>> matrix_rows() {
        std::vector<std::vector<Rational>> rows;
        while (!done() && !is_keyword(peek().tokens[0])) {
            Line line = next();
            std::vector<Rational> row;
            for (const std::string& tok : line.tokens) {
                try {
                    row.push_back(parse_rational(tok));
                } catch (const ParseError&) {
                    throw SyntaxError(line.number, "bad rational entry: " + tok);
                }
            }
            if (!rows.empty() && row.size() != rows.front().size())
                throw SyntaxError(line.number, "ragged matrix row");
            rows.push_back(std::move(row));
        }
        return rows;
    }

  private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

Matrix shaped(const std::vector<std::vector<Rational>>& rows, std::size_t nrows,
              std::size_t ncols, long degree, const std::string& what) {
    if (rows.size() != nrows || (nrows > 0 && rows.front().size() != ncols))
        throw SemanticError(degree, what + " must be " + std::to_string(nrows) + "x" +
                                        std::to_string(ncols));
    Matrix m(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
    return m;
}

int parse_header(Cursor& c, const std::string& expected) {
    if (c.done() || c.peek().tokens[0] != expected)
        throw SyntaxError(c.line_number(), "expected header: " + expected + " <version>");
    Line line = c.next();
    if (line.tokens.size() != 2 || line.tokens[1] != "1")
        throw SyntaxError(line.number, "unsupported version");
    return 1;
}

std::vector<std::size_t> parse_dims(Cursor& c) {
    if (c.done() || c.peek().tokens[0] != "dims")
        throw SyntaxError(c.line_number(), "expected: dims d0 d1 ...");
    Line line = c.next();
    if (line.tokens.size() < 2) throw SyntaxError(line.number, "dims needs entries");
    std::vector<std::size_t> dims;
    for (std::size_t k = 1; k < line.tokens.size(); ++k) {
        try {
            long d = std::stol(line.tokens[k]);
            if (d < 0) throw std::out_of_range("");
            dims.push_back(static_cast<std::size_t>(d));
        } catch (const std::exception&) {
            throw SyntaxError(line.number, "bad dimension: " + line.tokens[k]);
        }
    }
    return dims;
}

/// dims plus boundary blocks; stops at any block the complex grammar
/// does not own.
BasedChainComplex parse_complex_body(Cursor& c) {
    std::vector<std::size_t> dims = parse_dims(c);
    const long n = static_cast<long>(dims.size()) - 1;
    std::vector<Matrix> boundaries;
    for (long p = 1; p <= n; ++p) boundaries.emplace_back(dims[p - 1], dims[p]);
    while (!c.done() && c.peek().tokens[0] == "boundary") {
        Line head = c.next();
        const long p = c.degree_arg(head);
        if (p < 1 || p > n) throw SemanticError(p, "boundary degree out of range");
        boundaries[p - 1] =
            shaped(c.matrix_rows(), dims[p - 1], dims[p], p, "boundary matrix");
    }
    BasedChainComplex complex(dims, boundaries);
    if (auto r = validate(complex); !r.ok)
        throw SemanticError(r.degree ? static_cast<long>(*r.degree) : -1, r.message);
    return complex;
}

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

void serialize_complex_body(std::ostringstream& out, const BasedChainComplex& c) {
    out << "dims";
    for (std::size_t d : c.dims()) out << ' ' << d;
    out << '\n';
    for (long p = 1; p <= static_cast<long>(c.length()); ++p) {
        if (c.boundary(p).is_zero()) continue;
        out << "boundary " << p << '\n' << serialize_matrix(c.boundary(p));
    }
}

}  // namespace

std::string serialize_matrix(const Matrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << to_string(m(i, j));
        out << '\n';
    }
    return out.str();
}

ComplexDocument parse_complex_document(const std::string& text) {
    Cursor c(tokenize(text));
    ComplexDocument doc;
    doc.version = parse_header(c, "rft-complex");
    doc.complex = parse_complex_body(c);
    const long n = static_cast<long>(doc.complex.length());
    doc.homology_reps.assign(n + 1, std::nullopt);
    doc.labels.assign(n + 1, {});
    while (!c.done()) {
        Line head = c.next();
        const std::string& kind = head.tokens[0];
        if (kind == "homology") {
            const long p = c.degree_arg(head);
            if (p < 0 || p > n) throw SemanticError(p, "homology degree out of range");
            auto rows = c.matrix_rows();
            const std::size_t cols = rows.empty() ? 0 : rows.front().size();
            doc.homology_reps[p] =
                shaped(rows, doc.complex.dim(p), cols, p, "homology block");
        } else if (kind == "pairing") {
            const long p = c.degree_arg(head);
            if (p != static_cast<long>(doc.pairings.size()))
                throw SemanticError(p, "pairing blocks must appear in order from 0");
            auto rows = c.matrix_rows();
            const std::size_t r = rows.size();
            const std::size_t cols = r == 0 ? 0 : rows.front().size();
            doc.pairings.push_back(shaped(rows, r, cols, p, "pairing block"));
        } else if (kind == "labels") {
            const long p = c.degree_arg(head);
            if (p < 0 || p > n) throw SemanticError(p, "labels degree out of range");
            std::vector<std::string> names(head.tokens.begin() + 2, head.tokens.end());
            if (names.size() != doc.complex.dim(p))
                throw SemanticError(p, "labels must name every cell");
            doc.labels[p] = std::move(names);
        } else {
            throw SyntaxError(head.number, "unexpected block: " + kind);
        }
    }
    return doc;
}

BasedChainComplex parse_complex(const std::string& text) {
    return parse_complex_document(text).complex;
}

std::string serialize(const ComplexDocument& doc) {
    std::ostringstream out;
    out << "rft-complex " << doc.version << '\n';
    serialize_complex_body(out, doc.complex);
    for (std::size_t p = 0; p < doc.homology_reps.size(); ++p)
        if (doc.homology_reps[p]) {
            out << "homology " << p << '\n' << serialize_matrix(*doc.homology_reps[p]);
        }
    for (std::size_t p = 0; p < doc.pairings.size(); ++p)
        out << "pairing " << p << '\n' << serialize_matrix(doc.pairings[p]);
    for (std::size_t p = 0; p < doc.labels.size(); ++p)
        if (!doc.labels[p].empty())
            out << "labels " << p << ' ' << join(doc.labels[p]) << '\n';
    return out.str();
}

HomologyData document_homology(const ComplexDocument& doc) {
    HomologyData h = homology(doc.complex);
    for (std::size_t p = 0; p < doc.homology_reps.size(); ++p)
        if (doc.homology_reps[p]) {
            try {
                set_homology_reps(doc.complex, h, p, *doc.homology_reps[p]);
            } catch (const InconsistentHomologyData& e) {
                throw SemanticError(static_cast<long>(p), e.what());
            }
        }
    return h;
}

SESDocument parse_ses_document(const std::string& text) {
    Cursor c(tokenize(text));
    SESDocument doc;
    doc.version = parse_header(c, "rft-ses");
    bool have_a = false, have_b = false, have_d = false;
    for (int k = 0; k < 3; ++k) {
        if (c.done() || c.peek().tokens[0] != "complex")
            throw SyntaxError(c.line_number(), "expected: complex a|b|d");
        Line head = c.next();
        if (head.tokens.size() != 2)
            throw SyntaxError(head.number, "complex needs a name a|b|d");
        const std::string& which = head.tokens[1];
        BasedChainComplex parsed = parse_complex_body(c);
        if (which == "a" && !have_a) {
            doc.ses.a = std::move(parsed);
            have_a = true;
        } else if (which == "b" && !have_b) {
            doc.ses.b = std::move(parsed);
            have_b = true;
        } else if (which == "d" && !have_d) {
            doc.ses.d = std::move(parsed);
            have_d = true;
        } else {
            throw SyntaxError(head.number, "unexpected complex name: " + which);
        }
    }
    const long n = static_cast<long>(
        std::max({doc.ses.a.length(), doc.ses.b.length(), doc.ses.d.length()}));
    for (long p = 0; p <= n; ++p) {
        doc.ses.i.emplace_back(doc.ses.b.dim(p), doc.ses.a.dim(p));
        doc.ses.pi.emplace_back(doc.ses.d.dim(p), doc.ses.b.dim(p));
    }
    while (!c.done()) {
        Line head = c.next();
        if (head.tokens[0] != "map" || head.tokens.size() < 3)
            throw SyntaxError(head.number, "expected: map i|pi <degree>");
        const std::string& which = head.tokens[1];
        long p;
        try {
            p = std::stol(head.tokens[2]);
        } catch (const std::exception&) {
            throw SyntaxError(head.number, "bad degree: " + head.tokens[2]);
        }
        if (p < 0 || p > n) throw SemanticError(p, "map degree out of range");
        auto rows = c.matrix_rows();
        if (which == "i") {
            doc.ses.i[p] =
                shaped(rows, doc.ses.b.dim(p), doc.ses.a.dim(p), p, "map i");
        } else if (which == "pi") {
            doc.ses.pi[p] =
                shaped(rows, doc.ses.d.dim(p), doc.ses.b.dim(p), p, "map pi");
        } else {
            throw SyntaxError(head.number, "unknown map: " + which);
        }
    }
    return doc;
}

std::string serialize(const SESDocument& doc) {
    std::ostringstream out;
    out << "rft-ses " << doc.version << '\n';
    const std::pair<const char*, const BasedChainComplex*> parts[] = {
        {"a", &doc.ses.a}, {"b", &doc.ses.b}, {"d", &doc.ses.d}};
    for (const auto& [name, complex] : parts) {
        out << "complex " << name << '\n';
        serialize_complex_body(out, *complex);
    }
    for (std::size_t p = 0; p < doc.ses.i.size(); ++p)
        if (!doc.ses.i[p].is_zero())
            out << "map i " << p << '\n' << serialize_matrix(doc.ses.i[p]);
    for (std::size_t p = 0; p < doc.ses.pi.size(); ++p)
        if (!doc.ses.pi[p].is_zero())
            out << "map pi " << p << '\n' << serialize_matrix(doc.ses.pi[p]);
    return out.str();
}

}  // namespace rft
