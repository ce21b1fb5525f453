#include <tdc/core/compressor.hpp>

#include <stdexcept>
#include <string>

#include <tdc/core/stats.hpp>

namespace tdc {

Pipeline::Pipeline(std::vector<std::shared_ptr<Compressor>> stages) : stages_(std::move(stages)) {
    if(stages_.empty()) throw std::invalid_argument("empty pipeline");
}

Bytes Pipeline::compress(ByteView input) const {
    Bytes data(input.begin(), input.end());
    for(std::size_t i = 0; i < stages_.size(); ++i) {
        StatPhase phase("Stage " + std::to_string(i + 1));
        data = stages_[i]->compress(data);
        phase.log_stat("output_bytes", data.size());
    }
    return data;
}

Bytes Pipeline::decompress(ByteView input) const {
    Bytes data(input.begin(), input.end());
    for(std::size_t i = stages_.size(); i-- > 0;) {
        StatPhase phase("Stage " + std::to_string(i + 1));
        data = stages_[i]->decompress(data);
    }
    return data;
}

} // namespace tdc
