#include "recsizer/lp/dump.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "recsizer/errors.hpp"

namespace recsizer::lp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void write_value(std::ostream& out, double v) {
    if (v == kInf)
        out << "inf";
    else if (v == -kInf)
        out << "-inf";
    else
        out << std::setprecision(17) << v;
}

double read_value(std::istream& in) {
    std::string tok;
    if (!(in >> tok)) throw ParseError("lp dump: unexpected end of input");
    if (tok == "inf") return kInf;
    if (tok == "-inf") return -kInf;
    try {
        return std::stod(tok);
    } catch (const std::exception&) {
        throw ParseError("lp dump: bad number '" + tok + "'");
    }
}

} // namespace

void dump_lp(const LinearProgram& lp, std::ostream& out) {
    lp.check();
    out << "recsizer-lp 1\n";
    out << "rows " << lp.rows() << " cols " << lp.cols() << "\n";
    out << "c";
    for (Eigen::Index j = 0; j < lp.cols(); ++j) {
        out << ' ';
        write_value(out, lp.c[j]);
    }
    out << "\n";
    for (Eigen::Index i = 0; i < lp.rows(); ++i) {
        out << "row " << to_string(lp.senses[i]) << ' ';
        write_value(out, lp.b[i]);
        for (Eigen::Index j = 0; j < lp.cols(); ++j) {
            out << ' ';
            write_value(out, lp.a(i, j));
        }
        out << "\n";
    }
    out << "bounds\n";
    for (Eigen::Index j = 0; j < lp.cols(); ++j) {
        write_value(out, lp.lower[j]);
        out << ' ';
        write_value(out, lp.upper[j]);
        out << "\n";
    }
    out << "end\n";
}

std::string dump_lp(const LinearProgram& lp) {
    std::ostringstream os;
    dump_lp(lp, os);
    return os.str();
}

LinearProgram parse_lp(std::istream& in) {
    std::string tok;
    int version = 0;
    if (!(in >> tok >> version) || tok != "recsizer-lp" || version != 1)
        throw ParseError("lp dump: bad header");
    Eigen::Index m = 0, n = 0;
    std::string rows_kw, cols_kw;
    if (!(in >> rows_kw >> m >> cols_kw >> n) || rows_kw != "rows" || cols_kw != "cols")
        throw ParseError("lp dump: bad size line");
    if (m < 0 || n <= 0) throw ParseError("lp dump: bad dimensions");

    LinearProgram lp;
    lp.c.resize(n);
    lp.a.resize(m, n);
    lp.b.resize(m);
    lp.senses.resize(m);
    lp.lower.resize(n);
    lp.upper.resize(n);

    if (!(in >> tok) || tok != "c") throw ParseError("lp dump: expected 'c'");
    for (Eigen::Index j = 0; j < n; ++j) lp.c[j] = read_value(in);

    for (Eigen::Index i = 0; i < m; ++i) {
        std::string sense;
        if (!(in >> tok >> sense) || tok != "row") throw ParseError("lp dump: expected 'row'");
        if (sense == "<=")
            lp.senses[i] = Sense::LE;
        else if (sense == "=")
            lp.senses[i] = Sense::EQ;
        else if (sense == ">=")
            lp.senses[i] = Sense::GE;
        else
            throw ParseError("lp dump: bad sense '" + sense + "'");
        lp.b[i] = read_value(in);
        for (Eigen::Index j = 0; j < n; ++j) lp.a(i, j) = read_value(in);
    }

    if (!(in >> tok) || tok != "bounds") throw ParseError("lp dump: expected 'bounds'");
    for (Eigen::Index j = 0; j < n; ++j) {
        lp.lower[j] = read_value(in);
        lp.upper[j] = read_value(in);
    }
    if (!(in >> tok) || tok != "end") throw ParseError("lp dump: expected 'end'");
    lp.check();
    return lp;
}

LinearProgram parse_lp_text(const std::string& text) {
    std::istringstream is(text);
    return parse_lp(is);
}

} // namespace recsizer::lp
