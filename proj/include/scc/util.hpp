#pragma once

#include <cstddef>
#include <functional>

namespace scc {

/// Runs fn on a thread with the given stack size and waits for it,
/// rethrowing anything it throws. The functional search nests one stack
/// frame per vertex, so deep graphs go through here instead of the default
/// thread stack.
void run_with_stack(std::size_t stack_bytes, const std::function<void()>& fn);

} // namespace scc
