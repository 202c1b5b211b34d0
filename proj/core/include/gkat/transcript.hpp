#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gkat {

struct TranscriptEvent {
    std::size_t step;
    std::string kind;  // query | close | hypothesis | cex
    std::string payload;
};

class Transcript {
public:
    void add(std::string kind, std::string payload) {
        events_.push_back({events_.size(), std::move(kind), std::move(payload)});
    }
    const std::vector<TranscriptEvent>& events() const noexcept { return events_; }
    std::string csv() const;

private:
    std::vector<TranscriptEvent> events_;
};

// RFC 4180 quoting when needed.
std::string csv_field(const std::string& s);

}  // namespace gkat
