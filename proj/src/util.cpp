#include "scc/util.hpp"

#include <pthread.h>

#include <exception>
#include <stdexcept>
#include <system_error>

namespace scc {

namespace {

struct Call {
    const std::function<void()>* fn;
    std::exception_ptr error;
};

extern "C" void* trampoline(void* arg) {
    auto* call = static_cast<Call*>(arg);
    try {
        (*call->fn)();
    } catch (...) {
        call->error = std::current_exception();
    }
    return nullptr;
}

} // namespace

void run_with_stack(std::size_t stack_bytes, const std::function<void()>& fn) {
    pthread_attr_t attr;
    if (pthread_attr_init(&attr) != 0)
        throw std::runtime_error("pthread_attr_init failed");
    if (stack_bytes < static_cast<std::size_t>(PTHREAD_STACK_MIN))
        stack_bytes = PTHREAD_STACK_MIN;
    pthread_attr_setstacksize(&attr, stack_bytes);

    Call call{&fn, nullptr};
    pthread_t thread;
    const int rc = pthread_create(&thread, &attr, &trampoline, &call);
    pthread_attr_destroy(&attr);
    if (rc != 0)
        throw std::system_error(rc, std::generic_category(), "pthread_create");
    pthread_join(thread, nullptr);
    if (call.error)
        std::rethrow_exception(call.error);
}

} // namespace scc
