#include "semi/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "semi/errors.hpp"

namespace semi {

namespace {

// Row-major backtracking over partial tables. Cells [0, filled) are set.
class Search {
 public:
  explicit Search(std::size_t n) : n_(n), cells_(n * n, 0) {}

  // Places v at cell p = filled and checks every triple that this
  // assignment completes.
  bool place(std::size_t p, Element v) {
    cells_[p] = v;
    ++nodes_;
    const std::size_t i = p / n_;
    const std::size_t j = p % n_;
    const auto set = [p, this](std::size_t a, std::size_t b) {
      return a * n_ + b <= p;
    };
    const auto at = [this](std::size_t a, std::size_t b) {
      return cells_[a * n_ + b];
    };
    // New cell as (a*b) with a = i, b = j: (v*c) vs i*(j*c).
    for (std::size_t c = 0; c < n_; ++c) {
      if (set(v, c) && set(j, c) && set(i, at(j, c)) &&
          at(v, c) != at(i, at(j, c))) {
        return false;
      }
    }
    // New cell as (b*c) with b = i, c = j: (a*i)*j vs a*v.
    for (std::size_t a = 0; a < n_; ++a) {
      if (set(a, i) && set(at(a, i), j) && set(a, v) &&
          at(at(a, i), j) != at(a, v)) {
        return false;
      }
    }
    // New cell as ((x*y)*c) with x*y = i, c = j: v vs x*(y*j).
    // New cell as (a*(x*y)) with a = i, x*y = j: (i*x)*y vs v.
    for (std::size_t q = 0; q <= p; ++q) {
      const std::size_t x = q / n_;
      const std::size_t y = q % n_;
      if (cells_[q] == i && set(y, j) && set(x, at(y, j)) &&
          v != at(x, at(y, j))) {
        return false;
      }
      if (cells_[q] == j && set(i, x) && set(at(i, x), y) &&
          at(at(i, x), y) != v) {
        return false;
      }
    }
    return true;
  }

  // Depth-first from cell `p`; calls leaf(cells) for each complete table.
  template <typename Leaf>
  void run(std::size_t p, Leaf&& leaf) {
    if (p == n_ * n_) {
      leaf(cells_);
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (place(p, static_cast<Element>(v))) run(p + 1, leaf);
    }
  }

  // Collects every consistent first row.
  void first_rows(std::size_t p, std::vector<std::vector<Element>>& out) {
    if (p == n_) {
      out.emplace_back(cells_.begin(), cells_.begin() + static_cast<long>(n_));
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (place(p, static_cast<Element>(v))) first_rows(p + 1, out);
    }
  }

  // Installs a first row produced by first_rows().
  void seed(const std::vector<Element>& row) {
    std::copy(row.begin(), row.end(), cells_.begin());
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t n_;
  std::vector<Element> cells_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::string compact_table(const CayleyTable& t) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < t.order(); ++i) {
    if (i != 0) out << ',';
    out << '[';
    for (std::size_t j = 0; j < t.order(); ++j) {
      if (j != 0) out << ',';
      out << t(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

EnumerationReport enumerate_semigroups(std::size_t n, const Visitor& visitor,
                                       const EnumerationOptions& options) {
  if (n == 0 || n > kMaxEnumerationOrder) {
    throw DomainError("enumeration order must be in [1, " +
                      std::to_string(kMaxEnumerationOrder) + "], got " +
                      std::to_string(n));
  }
  if (n == kMaxEnumerationOrder && !options.allow_long) {
    throw DomainError("order 5 enumeration is long-running; enable it explicitly");
  }
  const auto start = std::chrono::steady_clock::now();

  EnumerationReport report;
  report.order = n;

  std::vector<std::vector<Element>> rows;
  Search prefix(n);
  prefix.first_rows(0, rows);
  report.tables_visited += prefix.nodes();

  std::vector<FirstRowCount> counts(rows.size());
  std::atomic<std::size_t> next{0};
  std::mutex merge;

  auto worker = [&] {
    std::vector<Violation> local;
    std::uint64_t nodes = 0;
    while (true) {
      const std::size_t r = next.fetch_add(1);
      if (r >= rows.size()) break;
      Search search(n);
      search.seed(rows[r]);
      std::uint64_t found = 0;
      search.run(n, [&](const std::vector<Element>& cells) {
        ++found;
        if (visitor) visitor(CayleyTable::assume_associative(n, cells), local);
      });
      nodes += search.nodes();
      counts[r] = FirstRowCount{rows[r], found};
      if (options.on_first_row) {
        std::lock_guard lock(merge);
        options.on_first_row(counts[r]);
      }
    }
    std::lock_guard lock(merge);
    report.tables_visited += nodes;
    report.violations.insert(report.violations.end(), local.begin(), local.end());
  };

  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& c : counts) report.labeled_count += c.count;
  report.first_rows = std::move(counts);
  std::sort(report.violations.begin(), report.violations.end());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace semi
