#include "sst/coin.hpp"

#include <istream>
#include <map>
#include <sstream>

#include "sst/errors.hpp"

namespace sst {

std::vector<RatVector> orthogonalize(const std::vector<RatVector>& columns) {
  std::vector<RatVector> out;
  std::vector<Rational> norms;
  for (std::size_t k = 0; k < columns.size(); ++k) {
    RatVector v = columns[k];
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].size() != v.size()) throw InputError("basis vectors have different lengths");
      Rational coeff = dot(v, out[i]) / norms[i];
      if (coeff == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= coeff * out[i][j];
    }
    if (is_zero(v)) {
      throw InputError("basis columns are linearly dependent: column " + std::to_string(k + 1) +
                       " lies in the span of the previous ones (rank " + std::to_string(out.size()) + " < " +
                       std::to_string(columns.size()) + ")");
    }
    v = primitive(v);
    norms.push_back(dot(v, v));
    out.push_back(std::move(v));
  }
  return out;
}

ReflectionCoin ReflectionCoin::grover(int degree) {
  if (degree < 1) throw InputError("Grover coin needs degree >= 1");
  return about(degree, {RatVector(static_cast<std::size_t>(degree), Rational(1))});
}

ReflectionCoin ReflectionCoin::about(int degree, const std::vector<RatVector>& columns) {
  if (degree < 1) throw InputError("coin degree must be positive");
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != degree) {
      throw InputError("coin basis vector has length " + std::to_string(c.size()) + ", expected " +
                       std::to_string(degree));
    }
  }
  ReflectionCoin coin;
  coin.basis_ = orthogonalize(columns);
  auto d = static_cast<std::size_t>(degree);
  coin.projection_ = RatMatrix(d, d);
  for (const auto& b : coin.basis_) {
    Rational inv = 1 / dot(b, b);
    for (std::size_t i = 0; i < d; ++i) {
      if (b[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) coin.projection_(i, j) += b[i] * b[j] * inv;
    }
  }
  return coin;
}

ReflectionCoin ReflectionCoin::minus_identity(int degree) { return about(degree, {}); }

RatMatrix ReflectionCoin::reflection() const {
  return projection_ * Rational(2) - RatMatrix::identity(projection_.rows());
}

bool ReflectionCoin::fixes(const RatVector& w) const {
  if (w.size() != projection_.rows()) return false;
  return projection_ * w == w;
}

CoinAssignment::CoinAssignment(Graph graph, std::vector<ReflectionCoin> coins)
    : graph_(std::move(graph)), coins_(std::move(coins)) {
  if (static_cast<int>(coins_.size()) != graph_.vertex_count()) {
    throw InputError("coin assignment must cover every vertex");
  }
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    if (coins_[v].degree() != graph_.degree(v)) {
      throw InputError("coin at vertex " + std::to_string(v) + " has dimension " +
                       std::to_string(coins_[v].degree()) + " but degree is " + std::to_string(graph_.degree(v)));
    }
  }
}

CoinAssignment CoinAssignment::all_grover(Graph graph) {
  std::vector<ReflectionCoin> coins;
  coins.reserve(static_cast<std::size_t>(graph.vertex_count()));
  for (int v = 0; v < graph.vertex_count(); ++v) coins.push_back(ReflectionCoin::grover(graph.degree(v)));
  return CoinAssignment(std::move(graph), std::move(coins));
}

CoinAssignment CoinAssignment::with_coin(int v, ReflectionCoin coin) const {
  std::vector<ReflectionCoin> coins = coins_;
  coins.at(static_cast<std::size_t>(v)) = std::move(coin);
  return CoinAssignment(graph_, std::move(coins));
}

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

CoinAssignment parse_coin_spec(std::istream& in, const Graph& graph) {
  enum class Kind { Grover, Minus, Basis };
  std::map<int, Kind> kinds;
  std::map<int, std::vector<RatVector>> columns;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(strip_comment(line));
    std::string keyword;
    if (!(ss >> keyword)) continue;
    auto fail = [&](const std::string& what) {
      throw InputError("coin spec line " + std::to_string(line_no) + ": " + what);
    };
    int v = -1;
    std::string kind;
    if (keyword != "coin" || !(ss >> v >> kind)) fail("expected 'coin <v> grover|minus|basis ...'");
    if (v < 0 || v >= graph.vertex_count()) fail("vertex out of range");
    if (kind == "grover" || kind == "minus") {
      if (kinds.count(v) && kinds[v] == Kind::Basis) fail("conflicting coin kinds");
      kinds[v] = kind == "grover" ? Kind::Grover : Kind::Minus;
    } else if (kind == "basis") {
      if (kinds.count(v) && kinds[v] != Kind::Basis) fail("conflicting coin kinds");
      kinds[v] = Kind::Basis;
      RatVector col;
      std::string token;
      while (ss >> token) col.push_back(parse_rational(token));
      if (static_cast<int>(col.size()) != graph.degree(v)) {
        fail("basis vector needs " + std::to_string(graph.degree(v)) + " entries");
      }
      columns[v].push_back(std::move(col));
    } else {
      fail("unknown coin kind '" + kind + "'");
    }
  }
  std::vector<ReflectionCoin> coins;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    auto it = kinds.find(v);
    if (it == kinds.end() || it->second == Kind::Grover) {
      coins.push_back(ReflectionCoin::grover(graph.degree(v)));
    } else if (it->second == Kind::Minus) {
      coins.push_back(ReflectionCoin::minus_identity(graph.degree(v)));
    } else {
      coins.push_back(ReflectionCoin::about(graph.degree(v), columns[v]));
    }
  }
  return CoinAssignment(graph, std::move(coins));
}

std::vector<RatVector> parse_subspace(std::istream& in) {
  std::vector<RatVector> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(strip_comment(line));
    std::string keyword;
    if (!(ss >> keyword)) continue;
    if (keyword != "w") throw InputError("subspace line " + std::to_string(line_no) + ": expected 'w <entries>'");
    RatVector v;
    std::string token;
    while (ss >> token) v.push_back(parse_rational(token));
    if (!out.empty() && v.size() != out.front().size()) {
      throw InputError("subspace line " + std::to_string(line_no) + ": inconsistent length");
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) throw InputError("subspace file lists no vectors");
  return out;
}

}  // namespace sst
