#include "vimp/datagen.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "vimp/csv.hpp"
#include "vimp/errors.hpp"
#include "vimp/rng.hpp"

namespace vimp {

void DataSpec::validate() const {
  if (n == 0) throw InvalidParameter("DataSpec: n must be positive");
  if (p < 2) throw InvalidParameter("DataSpec: p must be at least 2");
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw InvalidParameter("DataSpec: delta must lie in [0, 1)");
  }
  if (beta.size() != p) throw InvalidParameter("DataSpec: beta must have exactly p entries");
  if (!(noise_var > 0.0)) throw InvalidParameter("DataSpec: noise_var must be positive");
}

Matrix make_transform(std::size_t p, double delta) {
  if (p < 2) throw InvalidParameter("make_transform: p must be at least 2");
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw InvalidParameter("make_transform: delta must lie in [0, 1)");
  }
  Matrix a(p, p, delta);
  for (std::size_t i = 0; i < p; ++i) a(i, i) = 1.0;
  return a;
}

namespace {

Dataset generate_labeled(const DataSpec& spec, std::string_view label) {
  spec.validate();
  Rng rng(StreamKey(spec.seed).with(label).value());

  // Z is n x p i.i.d. standard normal, drawn row by row; X = Z A.
  const Matrix a = make_transform(spec.p, spec.delta);
  Matrix x(spec.n, spec.p);
  std::vector<double> z_row(spec.p);
  for (std::size_t r = 0; r < spec.n; ++r) {
    for (std::size_t j = 0; j < spec.p; ++j) z_row[j] = rng.next_normal();
    auto out = x.row(r);
    for (std::size_t j = 0; j < spec.p; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < spec.p; ++k) s += z_row[k] * a(k, j);
      out[j] = s;
    }
  }

  const double noise_sd = std::sqrt(spec.noise_var);
  std::vector<double> y(spec.n);
  for (std::size_t r = 0; r < spec.n; ++r) {
    const auto row = x.row(r);
    double s = 0.0;
    for (std::size_t j = 0; j < spec.p; ++j) s += row[j] * spec.beta[j];
    y[r] = s + noise_sd * rng.next_normal();
  }

  return Dataset{std::move(x), std::move(y), spec};
}

}  // namespace

Dataset generate(const DataSpec& spec) { return generate_labeled(spec, "train"); }

std::pair<Dataset, Dataset> generate_pair(const DataSpec& spec) {
  return {generate_labeled(spec, "train"), generate_labeled(spec, "valid")};
}

Dataset permute_column(const Dataset& data, std::size_t var, std::uint64_t seed) {
  if (var >= data.spec.p) throw IndexOutOfRange("permute_column: variable index out of range");
  Rng rng(StreamKey(seed).with("perm").with(var).value());
  std::vector<std::size_t> order(data.spec.n);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  shuffle(std::span<std::size_t>(order), rng);

  Dataset out = data;
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.x(i, var) = data.x(order[i], var);
  }
  return out;
}

void dataset_to_csv(const Dataset& data, std::ostream& out) {
  for (std::size_t j = 0; j < data.spec.p; ++j) out << 'x' << (j + 1) << ',';
  out << "y\n";
  for (std::size_t r = 0; r < data.spec.n; ++r) {
    const auto row = data.x.row(r);
    for (std::size_t j = 0; j < data.spec.p; ++j) {
      out << format_double(row[j]) << ',';
    }
    out << format_double(data.y[r]) << '\n';
  }
}

Dataset dataset_from_csv(std::istream& in, std::uint64_t seed) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty input: missing header row");
  const auto header = split_csv_line(line);
  if (header.size() < 3 || header.back() != "y") {
    throw SchemaMismatch("expected header x1..xp,y; got '" + line + "'");
  }
  const std::size_t p = header.size() - 1;
  for (std::size_t j = 0; j < p; ++j) {
    const std::string want = "x" + std::to_string(j + 1);
    if (header[j] != want) {
      throw SchemaMismatch("expected column '" + want + "' at position " +
                           std::to_string(j + 1) + ", got '" + std::string(header[j]) + "'");
    }
  }

  std::vector<double> values;
  std::vector<double> y;
  std::size_t row_index = 1;
  while (std::getline(in, line)) {
    ++row_index;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != p + 1) {
      throw ParseError("row " + std::to_string(row_index) + ": expected " +
                       std::to_string(p + 1) + " fields, got " + std::to_string(fields.size()));
    }
    for (std::size_t j = 0; j <= p; ++j) {
      const std::string location =
          "row " + std::to_string(row_index) + ", column " + std::to_string(j + 1);
      const double v = parse_double(fields[j], location);
      if (j < p) {
        values.push_back(v);
      } else {
        y.push_back(v);
      }
    }
  }
  if (y.empty()) throw EmptyInput("no data rows");

  const std::size_t n = y.size();
  Matrix x(n, p);
  x.data() = std::move(values);
  DataSpec spec;
  spec.n = n;
  spec.p = p;
  spec.delta = 0.0;
  spec.beta.assign(p, 0.0);
  spec.noise_var = 1.0;
  spec.seed = seed;
  return Dataset{std::move(x), std::move(y), std::move(spec)};
}

}  // namespace vimp
