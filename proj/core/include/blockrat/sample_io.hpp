#pragma once

#include <filesystem>
#include <iosfwd>

#include "blockrat/samples.hpp"

// Text format:
//
//   m n ell
//   z_re z_im            -- repeated ell times: the point ...
//   re im re im ...      -- ... followed by m rows of n entries (2n numbers)
//
// Numbers are written with 17 significant digits so a save/load round trip
// is exact. Blank lines and lines starting with '#' are ignored on input.
namespace blockrat {

class ParseError : public ParameterError {
  public:
    using ParameterError::ParameterError;
};

void write_samples(std::ostream& out, const SampleSet& samples);
SampleSet read_samples(std::istream& in);

void save_samples(const std::filesystem::path& path, const SampleSet& samples);
SampleSet load_samples(const std::filesystem::path& path);

} // namespace blockrat
