#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace hwdirac {

enum class Execution { Serial, Parallel };

/// Thread count for parallel kernels: the OpenMP default, capped by HWDIRAC_THREADS when set.
int worker_threads();

namespace detail {
void parallel_for(std::size_t n, void (*body)(std::size_t, void*), void* ctx);
}

/// Evaluates f(0..n-1) and returns the results in index order. The parallel path
/// splits indices across OpenMP threads; output order never depends on scheduling.
/// The first exception (lowest index) is rethrown after all workers finish.
template <class F>
auto map_indexed(std::size_t n, F&& f, Execution ex) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  struct Ctx {
    F* f;
    std::vector<std::optional<R>>* slots;
    std::vector<std::exception_ptr>* errors;
  } ctx{&f, &slots, &errors};
  auto body = [](std::size_t i, void* p) {
    auto* c = static_cast<Ctx*>(p);
    try {
      (*c->slots)[i].emplace((*c->f)(i));
    } catch (...) {
      (*c->errors)[i] = std::current_exception();
    }
  };
  if (ex == Execution::Parallel) {
    detail::parallel_for(n, body, &ctx);
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i, &ctx);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace hwdirac
