#include "tlrep/fibonacci.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace tlrep::fibonacci {

FusionSpace space(int n) {
  if (n < 2) throw std::invalid_argument("Fibonacci space needs n >= 2");
  return make_space(BracketParams::fibonacci(), std::vector<int>(n, kAnyon), kAnyon);
}

long long fibonacci_number(int n) {
  if (n < 1) throw std::invalid_argument("Fibonacci numbers start at f_1");
  long long prev = 1, cur = 1;
  for (int t = 3; t <= n; ++t) {
    const long long next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

Constants constants() {
  const BracketParams p = BracketParams::fibonacci();
  const double tau = (std::sqrt(5.0) - 1.0) / 2.0;
  Constants k;
  k.F << tau, std::sqrt(tau), std::sqrt(tau), -tau;
  k.R << a_power(p, 8), 0.0, 0.0, -a_power(p, 4);
  const Eigen::Matrix2cd f = k.F.cast<Complex>();
  k.N = f * k.R * f;
  return k;
}

std::vector<std::string> basis_strings(int n) {
  if (n < 2) throw std::invalid_argument("Fibonacci space needs n >= 2");
  std::vector<std::string> out;
  std::string cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (char ch : {'*', 'P'}) {
      if (ch == '*' && !cur.empty() && cur.back() == '*') continue;
      cur.push_back(ch);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, n - 2);
  return out;
}

UnitaryMatrix closed_form_generator(int n, int i, NeighbourRule rule) {
  if (i < 1 || i > n - 1) throw std::out_of_range("generator index out of range");
  const Constants k = constants();
  const std::vector<std::string> basis = basis_strings(n);
  std::map<std::string, std::size_t> index;
  for (std::size_t s = 0; s < basis.size(); ++s) index[basis[s]] = s;

  auto slot = [](char ch) { return ch == '*' ? 0 : 1; };
  auto lambda = [&](char ch) { return k.R(slot(ch), slot(ch)); };
  // x_1..x_n with x_1 = x_n = P
  auto x = [&](const std::string& s, int pos) { return (pos == 1 || pos == n) ? 'P' : s[pos - 2]; };

  const auto dim = static_cast<Eigen::Index>(basis.size());
  UnitaryMatrix u = UnitaryMatrix::Zero(dim, dim);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const std::string& ket = basis[s];
    if (i == 1) {
      u(s, s) = lambda(x(ket, 2));
      continue;
    }
    const char left = x(ket, i - 1);
    const char mid = x(ket, i);
    const char right = x(ket, i + 1);
    if (left == 'P' && right == 'P') {
      for (char alpha : {'*', 'P'}) {
        std::string out = ket;
        out[i - 2] = alpha;
        auto it = index.find(out);
        if (it != index.end()) u(it->second, s) += k.N(slot(alpha), slot(mid));
      }
    } else if (rule == NeighbourRule::kLiteral) {
      u(s, s) = lambda(mid);
    } else {
      u(s, s) = lambda(left == '*' && right == '*' ? '*' : 'P');
    }
  }
  return u;
}

}  // namespace tlrep::fibonacci
