#include "vander/samples.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "vander/errors.hpp"

namespace vander {

SampleSet::SampleSet(NodeVector nodes, std::vector<Scalar> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
    if (values_.size() != nodes_.size())
        throw InvalidArgument("sample set has " + std::to_string(nodes_.size()) +
                              " nodes but " + std::to_string(values_.size()) +
                              " values");
    for (const Scalar& v : values_)
        if (v.backend() != nodes_.backend())
            throw BackendMismatch("sample values are not on the nodes' backend");
}

namespace {

// Strips an optional trailing '\r' so CRLF files parse cleanly.
std::string chomp(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

SampleSet read_samples_csv(std::istream& in, Backend backend) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("empty sample file, expected header 'x,y'", 1);
    if (chomp(line) != "x,y")
        throw ParseError("bad sample header '" + chomp(line) + "', expected 'x,y'", 1);

    std::vector<Scalar> xs, ys;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = chomp(line);
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw ParseError("line " + std::to_string(lineno) +
                                 ": expected exactly two comma-separated fields",
                             lineno);
        try {
            xs.push_back(Scalar::parse(line.substr(0, comma), backend));
            ys.push_back(Scalar::parse(line.substr(comma + 1), backend));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
        }
    }
    if (xs.empty())
        throw ParseError("sample file has a header but no data rows", lineno);

    try {
        return SampleSet(NodeVector(std::move(xs)), std::move(ys));
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("invalid sample data: ") + e.what());
    }
}

void write_samples_csv(std::ostream& out, const SampleSet& samples) {
    out << "x,y\n";
    for (std::size_t i = 0; i < samples.size(); ++i)
        out << samples.nodes()[i].str() << "," << samples.values()[i].str() << "\n";
}

}  // namespace vander
