#include "spinnet/verify.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "spinnet/errors.hpp"

namespace spinnet {

namespace {

constexpr std::size_t kChunk = 2048;

struct Task {
  std::vector<int> twice;
};

// All tuples of `n` twice-values in [0, max], lexicographic, filtered.
template <class Accept>
std::vector<Task> enumerate(std::size_t n, int max, Accept accept) {
  std::vector<Task> out;
  std::vector<int> t(n, 0);
  while (true) {
    if (accept(t)) out.push_back({t});
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++t[k] <= max) break;
      t[k] = 0;
      if (k == 0) return out;
    }
  }
}

bool triad(int a, int b, int c) { return triad_valid(Triad{Spin::from_twice(a), Spin::from_twice(b), Spin::from_twice(c)}); }

BEInstance be_of(const std::vector<int>& t) {
  std::array<int, 9> a{};
  std::copy_n(t.begin(), 9, a.begin());
  return BEInstance::from_twice(a);
}

std::vector<Task> tasks_for(GridKind kind, int max) {
  switch (kind) {
    case GridKind::Orthogonality:
      // (a, b, c, d, y, y')
      return enumerate(6, max, [](const std::vector<int>& t) {
        return triad(t[0], t[3], t[4]) && triad(t[1], t[2], t[4]) && triad(t[0], t[3], t[5]) &&
               triad(t[1], t[2], t[5]) &&
               !sixj_admissible_x(Spin::from_twice(t[0]), Spin::from_twice(t[1]),
                                  Spin::from_twice(t[2]), Spin::from_twice(t[3]))
                    .empty();
      });
    case GridKind::BE:
    case GridKind::Pachner23:
      return enumerate(9, max, [](const std::vector<int>& t) { return be_of(t).valid(); });
    case GridKind::Pachner14:
      // BE instance followed by p'; p' must close both (a d p') and (b c p').
      return enumerate(10, max, [](const std::vector<int>& t) {
        return triad(t[1], t[2], t[9]) && triad(t[0], t[3], t[9]) && be_of(t).valid();
      });
  }
  return {};
}

VerifyRecord run_task(GridKind kind, const Task& task, BEForm form) {
  const auto& t = task.twice;
  auto s = [&](std::size_t i) { return Spin::from_twice(t[i]); };
  VerifyRecord rec;
  if (kind == GridKind::Orthogonality) {
    static const char* names[] = {"a", "b", "c", "d", "y", "y'"};
    for (std::size_t i = 0; i < 6; ++i) rec.instance.emplace_back(names[i], s(i));
    rec.result = orthogonality_check(s(0), s(1), s(2), s(3), s(4), s(5));
    return rec;
  }
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "p", "q", "r", "p'"};
  const std::size_t n = kind == GridKind::Pachner14 ? 10 : 9;
  for (std::size_t i = 0; i < n; ++i) rec.instance.emplace_back(names[i], s(i));
  const BEInstance inst = be_of(t);
  switch (kind) {
    case GridKind::BE: rec.result = be_check(inst, form); break;
    case GridKind::Pachner23: rec.result = pachner_23_check(inst); break;
    case GridKind::Pachner14: rec.result = pachner_14_check(inst, s(9)); break;
    default: break;
  }
  return rec;
}

}  // namespace

std::string_view grid_kind_name(GridKind kind) {
  switch (kind) {
    case GridKind::Orthogonality: return "orthogonality";
    case GridKind::BE: return "be";
    case GridKind::Pachner23: return "pachner-2-3";
    case GridKind::Pachner14: return "pachner-1-4";
  }
  return "";
}

std::string VerifyReport::summary() const {
  return std::to_string(instances) + " instances, " + std::to_string(failures) + " failures";
}

VerifyReport verify_grid(int max_twice, GridKind kind, const VerifyOptions& options) {
  if (max_twice < 0) throw InvalidSpin("max_twice must be non-negative");
  if (max_twice > options.ceiling)
    throw CeilingExceeded("max_twice " + std::to_string(max_twice) + " exceeds the ceiling " +
                          std::to_string(options.ceiling));

  const std::vector<Task> tasks = tasks_for(kind, max_twice);
  VerifyReport report{kind, max_twice, tasks.size(), 0};
  const unsigned jobs = std::max(1u, options.jobs);

  std::vector<std::optional<VerifyRecord>> slots;
  for (std::size_t begin = 0; begin < tasks.size(); begin += kChunk) {
    const std::size_t end = std::min(tasks.size(), begin + kChunk);
    slots.assign(end - begin, std::nullopt);
    auto work = [&](unsigned w) {
      for (std::size_t i = begin + w; i < end; i += jobs)
        slots[i - begin] = run_task(kind, tasks[i], options.be_form);
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    }
    for (const auto& rec : slots) {
      if (!rec->result.equal) ++report.failures;
      if (options.sink) options.sink(*rec);
    }
  }
  return report;
}

}  // namespace spinnet
