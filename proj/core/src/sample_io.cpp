#include "blockrat/sample_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace blockrat {

namespace {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank, non-comment line split into numbers.
    std::vector<double> numbers(std::size_t expected, const char* what) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') { continue; }
            std::vector<double> out;
            const char* p = line.data();
            const char* end = line.data() + line.size();
            while (p < end) {
                while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) { ++p; }
                if (p == end) { break; }
                double value = 0.0;
                const auto [next, ec] = std::from_chars(p, end, value);
                if (ec != std::errc()) { fail(std::string("malformed number in ") + what); }
                out.push_back(value);
                p = next;
            }
            if (out.size() != expected) {
                fail(std::string(what) + ": expected " + std::to_string(expected) + " numbers, found " +
                     std::to_string(out.size()));
            }
            return out;
        }
        ++line_no_;
        fail(std::string("unexpected end of file while reading ") + what);
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("line " + std::to_string(line_no_) + ": " + message);
    }

  private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

std::size_t as_count(double x, const LineReader& reader, const char* what) {
    if (!(x >= 1.0) || x != static_cast<double>(static_cast<std::size_t>(x))) {
        reader.fail(std::string(what) + " must be a positive integer");
    }
    return static_cast<std::size_t>(x);
}

} // namespace

void write_samples(std::ostream& out, const SampleSet& samples) {
    out << samples.rows() << ' ' << samples.cols() << ' ' << samples.size() << '\n';
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out << format_double(samples.point(i).real()) << ' ' << format_double(samples.point(i).imag()) << '\n';
        const Matrix& v = samples.value(i);
        for (Index r = 0; r < v.rows(); ++r) {
            for (Index c = 0; c < v.cols(); ++c) {
                if (c > 0) { out << ' '; }
                out << format_double(v(r, c).real()) << ' ' << format_double(v(r, c).imag());
            }
            out << '\n';
        }
    }
}

SampleSet read_samples(std::istream& in) {
    LineReader reader(in);
    const auto header = reader.numbers(3, "header 'm n ell'");
    const std::size_t m = as_count(header[0], reader, "m");
    const std::size_t n = as_count(header[1], reader, "n");
    const std::size_t ell = as_count(header[2], reader, "ell");

    std::vector<Complex> points;
    std::vector<Matrix> values;
    points.reserve(ell);
    values.reserve(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        const auto z = reader.numbers(2, "sample point");
        points.emplace_back(z[0], z[1]);
        Matrix v(static_cast<Index>(m), static_cast<Index>(n));
        for (std::size_t r = 0; r < m; ++r) {
            const auto row = reader.numbers(2 * n, "matrix row");
            for (std::size_t c = 0; c < n; ++c) {
                v(static_cast<Index>(r), static_cast<Index>(c)) = Complex(row[2 * c], row[2 * c + 1]);
            }
        }
        values.push_back(std::move(v));
    }
    try {
        return SampleSet(std::move(points), std::move(values));
    } catch (const ParameterError& err) {
        throw ParseError(std::string("invalid sample set: ") + err.what());
    }
}

void save_samples(const std::filesystem::path& path, const SampleSet& samples) {
    std::ofstream out(path);
    if (!out) { throw ParameterError("cannot open '" + path.string() + "' for writing"); }
    write_samples(out, samples);
    if (!out) { throw ParameterError("failed writing '" + path.string() + "'"); }
}

SampleSet load_samples(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) { throw ParameterError("cannot open '" + path.string() + "'"); }
    try {
        return read_samples(in);
    } catch (const ParseError& err) {
        throw ParseError(path.string() + ": " + err.what());
    }
}

} // namespace blockrat
