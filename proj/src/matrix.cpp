#include <robinson/matrix.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace robinson {

namespace {

std::string one_based(std::initializer_list<Vertex> vs)
{
    std::string s = "(";
    bool first = true;
    for (auto v : vs) {
        if (! first)
            s += ",";
        s += std::to_string(v + 1);
        first = false;
    }
    return s + ")";
}

} // namespace

ParseError::ParseError(int line, int column, const std::string & what) :
    std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
    _line(line),
    _column(column)
{
}

ValidationError::ValidationError(Defect defect, std::vector<Vertex> where, const std::string & what) :
    std::runtime_error(what), _defect(defect), _where(std::move(where))
{
}

std::optional<Triple> validate_robinson(const RawMatrix & m, int)
{
    const int n = static_cast<int>(m.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (m[u][w] > m[u][v] || m[u][w] > m[v][w])
                    return Triple{u, v, w};
    return std::nullopt;
}

RobinsonMatrix RobinsonMatrix::from_rows(int k, const RawMatrix & rows)
{
    const int n = static_cast<int>(rows.size());
    if (n < 1)
        throw ValidationError(Defect::Shape, {}, "matrix must have at least one row");
    if (k < 1)
        throw ValidationError(Defect::Shape, {}, "level count k must be at least 1");
    for (int u = 0; u < n; ++u)
        if (static_cast<int>(rows[u].size()) != n)
            throw ValidationError(Defect::Shape, {u}, "row " + std::to_string(u + 1) + " has "
                    + std::to_string(rows[u].size()) + " entries, expected " + std::to_string(n));

    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (rows[u][v] < 0 || rows[u][v] > k)
                throw ValidationError(Defect::EntryOutOfRange, {u, v},
                    "entry " + one_based({u, v}) + " = " + std::to_string(rows[u][v]) + " is outside [0,"
                        + std::to_string(k) + "]");
    for (int u = 0; u < n; ++u)
        if (rows[u][u] != k)
            throw ValidationError(Defect::Diagonal, {u},
                "diagonal entry " + one_based({u, u}) + " = " + std::to_string(rows[u][u]) + ", expected "
                    + std::to_string(k));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rows[u][v] != rows[v][u])
                throw ValidationError(Defect::Asymmetric, {u, v}, "asymmetric at " + one_based({u, v}));
    if (auto t = validate_robinson(rows, k))
        throw ValidationError(Defect::NotRobinson, {t->u, t->v, t->w},
            "Robinson condition violated at " + one_based({t->u, t->v, t->w}));

    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (auto & r : rows)
        entries.insert(entries.end(), r.begin(), r.end());
    return RobinsonMatrix(n, k, std::move(entries));
}

RawMatrix RobinsonMatrix::rows() const
{
    RawMatrix r(_n, std::vector<int>(_n));
    for (int u = 0; u < _n; ++u)
        for (int v = 0; v < _n; ++v)
            r[u][v] = at(u, v);
    return r;
}

bool RobinsonMatrix::same_row(Vertex u, Vertex v) const
{
    auto a = _entries.begin() + static_cast<std::ptrdiff_t>(u) * _n;
    auto b = _entries.begin() + static_cast<std::ptrdiff_t>(v) * _n;
    return std::equal(a, a + _n, b);
}

namespace {

struct Token
{
    long long value;
    int column;
};

std::vector<Token> tokenize(const std::string & line, int line_no)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (line[i] == '-' || line[i] == '+')
            ++i;
        std::size_t digits = i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
            ++i;
        if (i == digits || (i < line.size() && ! std::isspace(static_cast<unsigned char>(line[i]))))
            throw ParseError(line_no, static_cast<int>(start) + 1, "expected an integer");
        if (i - digits > 9)
            throw ParseError(line_no, static_cast<int>(start) + 1, "integer too large");
        out.push_back({std::stoll(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return out;
}

bool is_comment_or_blank(const std::string & line)
{
    auto p = line.find_first_not_of(" \t\r");
    return p == std::string::npos || line[p] == '#';
}

} // namespace

RobinsonMatrix parse_matrix(std::istream & in)
{
    std::string line;
    int line_no = 0;
    int n = -1, k = -1;
    RawMatrix rows;

    while (std::getline(in, line)) {
        ++line_no;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        if (is_comment_or_blank(line))
            continue;
        auto tokens = tokenize(line, line_no);
        if (n < 0) {
            if (tokens.size() != 2)
                throw ParseError(line_no, tokens.size() > 2 ? tokens[2].column : static_cast<int>(line.size()) + 1,
                    "header must be \"n k\"");
            if (tokens[0].value < 1)
                throw ParseError(line_no, tokens[0].column, "n must be at least 1");
            if (tokens[1].value < 1)
                throw ParseError(line_no, tokens[1].column, "k must be at least 1");
            n = static_cast<int>(tokens[0].value);
            k = static_cast<int>(tokens[1].value);
            continue;
        }
        if (static_cast<int>(rows.size()) == n)
            throw ParseError(line_no, tokens.front().column, "unexpected extra row");
        if (static_cast<int>(tokens.size()) != n)
            throw ParseError(line_no,
                static_cast<int>(tokens.size()) > n ? tokens[n].column : static_cast<int>(line.size()) + 1,
                "expected " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()));
        std::vector<int> row;
        row.reserve(n);
        for (auto & t : tokens) {
            if (t.value < 0 || t.value > k)
                throw ParseError(line_no, t.column,
                    "entry " + std::to_string(t.value) + " outside [0," + std::to_string(k) + "]");
            row.push_back(static_cast<int>(t.value));
        }
        rows.push_back(std::move(row));
    }
    if (n < 0)
        throw ParseError(line_no + 1, 1, "missing header \"n k\"");
    if (static_cast<int>(rows.size()) != n)
        throw ParseError(line_no + 1, 1,
            "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
    return RobinsonMatrix::from_rows(k, rows);
}

RobinsonMatrix parse_matrix_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_matrix(in);
}

RobinsonMatrix load_matrix(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_matrix(in);
}

void write_matrix(std::ostream & out, const RobinsonMatrix & m)
{
    out << m.size() << ' ' << m.levels() << '\n';
    for (int u = 0; u < m.size(); ++u) {
        for (int v = 0; v < m.size(); ++v)
            out << (v ? " " : "") << m.at(u, v);
        out << '\n';
    }
}

std::string to_text(const RobinsonMatrix & m)
{
    std::ostringstream s;
    write_matrix(s, m);
    return s.str();
}

RawMatrix level_graph(const RobinsonMatrix & m, int t)
{
    if (t < 1 || t > m.levels())
        throw std::out_of_range("level " + std::to_string(t) + " outside [1," + std::to_string(m.levels()) + "]");
    RawMatrix g(m.size(), std::vector<int>(m.size()));
    for (int u = 0; u < m.size(); ++u)
        for (int v = 0; v < m.size(); ++v)
            g[u][v] = m.at(u, v) >= t ? 1 : 0;
    return g;
}

} // namespace robinson
