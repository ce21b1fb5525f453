#include <tdc/util/alloc_tracker.hpp>

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <cstring>
#include <new>

// Replaces the global allocation functions so that every heap allocation of
// the process is counted. Each block carries a small prefix holding its size
// (and, for over-aligned blocks, the address returned by malloc).

namespace {

std::atomic<std::int64_t> g_current{0};
std::atomic<std::int64_t> g_peak{0};

constexpr std::size_t kPrefix = alignof(std::max_align_t);

struct Prefix {
    std::size_t size;
    void* base;
};
static_assert(sizeof(Prefix) <= kPrefix);

void raise_peak(std::int64_t value) {
    auto peak = g_peak.load(std::memory_order_relaxed);
    while(value > peak && !g_peak.compare_exchange_weak(peak, value, std::memory_order_relaxed)) {
    }
}

void account_alloc(std::size_t n) {
    const auto now = g_current.fetch_add(static_cast<std::int64_t>(n), std::memory_order_relaxed) +
                     static_cast<std::int64_t>(n);
    raise_peak(now);
}

void account_free(std::size_t n) {
    g_current.fetch_sub(static_cast<std::int64_t>(n), std::memory_order_relaxed);
}

void* tracked_alloc(std::size_t n, std::size_t align) noexcept {
    if(align < kPrefix) align = kPrefix;
    // room for the prefix in front of an `align`-aligned payload
    const std::size_t extra = align + kPrefix;
    void* base = std::malloc(n + extra);
    if(!base) return nullptr;
    auto raw = reinterpret_cast<std::uintptr_t>(base) + kPrefix;
    raw = (raw + align - 1) & ~(static_cast<std::uintptr_t>(align) - 1);
    void* p = reinterpret_cast<void*>(raw);
    Prefix pre{n, base};
    std::memcpy(static_cast<char*>(p) - kPrefix, &pre, sizeof(pre));
    account_alloc(n);
    return p;
}

void tracked_free(void* p) noexcept {
    if(!p) return;
    Prefix pre;
    std::memcpy(&pre, static_cast<char*>(p) - kPrefix, sizeof(pre));
    account_free(pre.size);
    std::free(pre.base);
}

void* alloc_or_throw(std::size_t n, std::size_t align) {
    if(n == 0) n = 1;
    for(;;) {
        if(void* p = tracked_alloc(n, align)) return p;
        auto handler = std::get_new_handler();
        if(!handler) throw std::bad_alloc();
        handler();
    }
}

} // namespace

namespace tdc::alloc {

std::int64_t current_bytes() { return g_current.load(std::memory_order_relaxed); }

std::int64_t peak_bytes() { return g_peak.load(std::memory_order_relaxed); }

std::int64_t reset_peak() {
    return g_peak.exchange(g_current.load(std::memory_order_relaxed), std::memory_order_relaxed);
}

void merge_peak(std::int64_t value) { raise_peak(value); }

} // namespace tdc::alloc

void* operator new(std::size_t n) { return alloc_or_throw(n, kPrefix); }
void* operator new[](std::size_t n) { return alloc_or_throw(n, kPrefix); }
void* operator new(std::size_t n, const std::nothrow_t&) noexcept { return tracked_alloc(n ? n : 1, kPrefix); }
void* operator new[](std::size_t n, const std::nothrow_t&) noexcept { return tracked_alloc(n ? n : 1, kPrefix); }
void* operator new(std::size_t n, std::align_val_t a) { return alloc_or_throw(n, static_cast<std::size_t>(a)); }
void* operator new[](std::size_t n, std::align_val_t a) { return alloc_or_throw(n, static_cast<std::size_t>(a)); }
void* operator new(std::size_t n, std::align_val_t a, const std::nothrow_t&) noexcept {
    return tracked_alloc(n ? n : 1, static_cast<std::size_t>(a));
}
void* operator new[](std::size_t n, std::align_val_t a, const std::nothrow_t&) noexcept {
    return tracked_alloc(n ? n : 1, static_cast<std::size_t>(a));
}

void operator delete(void* p) noexcept { tracked_free(p); }
void operator delete[](void* p) noexcept { tracked_free(p); }
void operator delete(void* p, std::size_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::size_t) noexcept { tracked_free(p); }
void operator delete(void* p, const std::nothrow_t&) noexcept { tracked_free(p); }
void operator delete[](void* p, const std::nothrow_t&) noexcept { tracked_free(p); }
void operator delete(void* p, std::align_val_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::align_val_t) noexcept { tracked_free(p); }
void operator delete(void* p, std::size_t, std::align_val_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::size_t, std::align_val_t) noexcept { tracked_free(p); }
void operator delete(void* p, std::align_val_t, const std::nothrow_t&) noexcept { tracked_free(p); }
void operator delete[](void* p, std::align_val_t, const std::nothrow_t&) noexcept { tracked_free(p); }
