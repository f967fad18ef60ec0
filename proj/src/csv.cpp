#include "experts/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace experts {
namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) comma = line.size();
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return fields;
}

double parse_double(const std::string& field) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0' || errno != 0) {
    raise(ErrorCode::ParseError, "cannot parse number '" + field + "'");
  }
  return value;
}

std::int64_t parse_int(const std::string& field) {
  errno = 0;
  char* end = nullptr;
  const long long value = std::strtoll(field.c_str(), &end, 10);
  if (end == field.c_str() || *end != '\0' || errno != 0) {
    raise(ErrorCode::ParseError, "cannot parse integer '" + field + "'");
  }
  return value;
}

std::uint64_t parse_uint(const std::string& field) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(field.c_str(), &end, 10);
  if (end == field.c_str() || *end != '\0' || errno != 0) {
    raise(ErrorCode::ParseError, "cannot parse integer '" + field + "'");
  }
  return value;
}

struct CurveKey {
  std::string learner;
  std::string mechanism;
  std::size_t n;
  std::size_t n0;
  std::uint64_t seed;
  std::int64_t replications;

  bool operator==(const CurveKey&) const = default;
};

}  // namespace

std::string curves_to_csv(const std::vector<ExpectedRegretCurve>& curves) {
  std::ostringstream os;
  os << kCurveCsvHeader << '\n';
  for (const ExpectedRegretCurve& curve : curves) {
    for (std::size_t c = 0; c < curve.checkpoints.size(); ++c) {
      os << curve.checkpoints[c] << ',' << format_double(curve.mean[c]) << ','
         << format_double(curve.std_error[c]) << ',' << curve.replications << ','
         << curve.learner_id << ',' << mechanism_kind_name(curve.mechanism.kind)
         << ',' << curve.mechanism.n_experts << ',' << curve.mechanism.n_effective
         << ',' << curve.base_seed << '\n';
    }
  }
  return os.str();
}

std::vector<ExpectedRegretCurve> parse_curves_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCurveCsvHeader) {
    raise(ErrorCode::ParseError, "curve CSV header mismatch");
  }
  std::vector<ExpectedRegretCurve> curves;
  CurveKey current{};
  bool have_current = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_fields(line);
    if (f.size() != 9) {
      raise(ErrorCode::ParseError, "curve CSV row needs 9 fields: " + line);
    }
    CurveKey key{f[4], f[5], static_cast<std::size_t>(parse_int(f[6])),
                 static_cast<std::size_t>(parse_int(f[7])), parse_uint(f[8]),
                 parse_int(f[3])};
    if (!have_current || !(key == current)) {
      ExpectedRegretCurve curve;
      curve.learner_id = key.learner;
      curve.mechanism.kind = mechanism_kind_from_name(key.mechanism);
      curve.mechanism.n_experts = key.n;
      curve.mechanism.n_effective = key.n0;
      curve.base_seed = key.seed;
      curve.replications = key.replications;
      curves.push_back(std::move(curve));
      current = key;
      have_current = true;
    }
    curves.back().checkpoints.push_back(parse_int(f[0]));
    curves.back().mean.push_back(parse_double(f[1]));
    curves.back().std_error.push_back(parse_double(f[2]));
  }
  if (curves.empty()) {
    raise(ErrorCode::ParseError, "curve CSV has no data rows");
  }
  return curves;
}

std::vector<ExpectedRegretCurve> read_curves_csv(const std::string& path) {
  return parse_curves_csv(read_file(path));
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      raise(ErrorCode::IoError, "cannot open '" + tmp + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      raise(ErrorCode::IoError, "write to '" + tmp + "' failed");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    raise(ErrorCode::IoError,
          "rename to '" + path + "' failed: " + std::strerror(errno));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace experts
