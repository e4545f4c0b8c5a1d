#include "cherednik/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cherednik {

Partition parse_partition(const std::string& text) {
  Partition lambda;
  std::string token;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ') {
      if (token.empty()) continue;
      try {
        lambda.push_back(std::stoi(token));
      } catch (const std::exception&) {
        fail(ErrorCode::NotAPartition, "cannot parse partition '" + text + "'");
      }
      token.clear();
    } else {
      token += ch;
    }
  }
  validate_partition(lambda);
  return lambda;
}

void validate_partition(const Partition& lambda) {
  require(!lambda.empty(), ErrorCode::NotAPartition, "empty partition");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    require(lambda[i] > 0, ErrorCode::NotAPartition, "parts must be positive");
    if (i > 0) require(lambda[i] <= lambda[i - 1], ErrorCode::NotAPartition, "parts must be weakly decreasing");
  }
}

int partition_size(const Partition& lambda) {
  int s = 0;
  for (int x : lambda) s += x;
  return s;
}

std::string partition_to_string(const Partition& lambda) {
  std::string s;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
  return s;
}

int n_lambda(const Partition& lambda) {
  int s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += static_cast<int>(i) * lambda[i];
  return s;
}

Partition conjugate(const Partition& lambda) {
  Partition c;
  if (lambda.empty()) return c;
  for (int j = 0; j < lambda[0]; ++j) {
    int len = 0;
    for (int x : lambda)
      if (x > j) ++len;
    c.push_back(len);
  }
  return c;
}

std::vector<int> hook_lengths(const Partition& lambda) {
  const Partition c = conjugate(lambda);
  std::vector<int> h;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) h.push_back((lambda[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1);
  return h;
}

Partition Tableau::shape() const {
  Partition p;
  for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
  return p;
}

int Tableau::size() const {
  int s = 0;
  for (const auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

bool Tableau::is_standard() const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && rows[i][j] <= rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
    }
  return true;
}

void validate_tableau(const Tableau& t) {
  require(!t.rows.empty(), ErrorCode::MalformedTableau, "empty tableau");
  const int n = t.size();
  std::vector<char> seen(n + 1, 0);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    require(!t.rows[i].empty(), ErrorCode::MalformedTableau, "empty row");
    if (i > 0) require(t.rows[i].size() <= t.rows[i - 1].size(), ErrorCode::MalformedTableau, "row lengths must weakly decrease");
    for (int x : t.rows[i]) {
      require(x >= 1 && x <= n && !seen[x], ErrorCode::MalformedTableau, "entries must be 1..n, each once");
      seen[x] = 1;
    }
  }
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  validate_partition(lambda);
  const int n = partition_size(lambda);
  std::vector<Tableau> out;
  Tableau cur;
  cur.rows.resize(lambda.size());
  std::function<void(int)> place = [&](int next) {
    if (next > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      const std::size_t len = cur.rows[i].size();
      if (static_cast<int>(len) >= lambda[i]) continue;
      if (i > 0 && cur.rows[i - 1].size() <= len) continue;
      cur.rows[i].push_back(next);
      place(next + 1);
      cur.rows[i].pop_back();
    }
  };
  place(1);
  return out;
}

}  // namespace cherednik
