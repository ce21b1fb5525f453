#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <tdc/core/spec.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

enum class ParamKind { integer, string, algorithm };

struct ParamDecl {
    std::string name;
    std::string alias;          // optional short name, e.g. "t" for "threshold"
    ParamKind kind = ParamKind::integer;
    std::string type;           // required algorithm type for ParamKind::algorithm
    std::optional<std::string> default_value; // spec text of the default
};

/// Describes a registered algorithm: its type, identifier and parameters.
class Meta {
public:
    Meta(std::string type, std::string id, std::string description = {});

    Meta& param_int(std::string name, std::optional<std::int64_t> def = std::nullopt, std::string alias = {});
    Meta& param_string(std::string name, std::optional<std::string> def = std::nullopt, std::string alias = {});
    Meta& param_algorithm(std::string name, std::string type, std::optional<std::string> def = std::nullopt,
                          std::string alias = {});

    const std::string& type() const { return type_; }
    const std::string& id() const { return id_; }
    const std::string& description() const { return description_; }
    const std::vector<ParamDecl>& params() const { return params_; }

    const ParamDecl* find_param(std::string_view name_or_alias) const;

private:
    Meta& add(ParamDecl p);

    std::string type_, id_, description_;
    std::vector<ParamDecl> params_;
};

class Registry;

/// Resolved arguments of one algorithm instance.
class Config {
public:
    Config(const Registry& registry, const Meta& meta, AlgorithmSpec resolved)
        : registry_(&registry), meta_(&meta), spec_(std::move(resolved)) {}

    const Meta& meta() const { return *meta_; }
    const Registry& registry() const { return *registry_; }
    const AlgorithmSpec& spec() const { return spec_; }

    std::int64_t get_int(std::string_view name) const;
    std::string get_string(std::string_view name) const;
    const AlgorithmSpec& get_algorithm(std::string_view name) const;

    /// Instantiates the sub-algorithm passed for parameter `name`.
    template<typename T>
    std::shared_ptr<T> create(std::string_view name) const;

private:
    const ArgValue& value(std::string_view name) const;

    const Registry* registry_;
    const Meta* meta_;
    AlgorithmSpec spec_;
};

/// Maps (type, id) to a Meta and a factory. Immutable once populated; safe
/// to share across threads afterwards.
///
/// Algorithm interfaces name their type through a static `kType` member.
class Registry {
public:
    template<typename T>
    using Factory = std::function<std::shared_ptr<T>(const Config&)>;

    template<typename T>
    void add(Meta meta, Factory<T> factory) {
        if(meta.type() != T::kType) {
            throw std::logic_error("registry: meta type " + meta.type() + " does not match " + T::kType);
        }
        add_erased(std::move(meta), [f = std::move(factory)](const Config& c) -> std::shared_ptr<void> {
            return f(c);
        });
    }

    /// Registers `id` as shorthand for the given spec text, e.g. bwtzip.
    void add_alias(std::string type, std::string id, std::string spec_text);

    const Meta* find(std::string_view type, std::string_view id) const;
    bool contains(std::string_view type, std::string_view id) const;
    /// True if `id` names a registered algorithm or alias of `type`.
    bool accepts(std::string_view type, std::string_view id) const;

    std::vector<const Meta*> list(std::string_view type) const;
    std::vector<std::pair<std::string, std::string>> aliases(std::string_view type) const;

    /// Checks `spec` against the registered metas of `type` and returns its
    /// canonical form: aliases expanded, every parameter named, in
    /// declaration order, defaults filled in. Chains are only accepted for
    /// the "compressor" type.
    AlgorithmSpec resolve(const AlgorithmSpec& spec, std::string_view type) const;

    /// Instantiates an already resolved single-stage spec.
    template<typename T>
    std::shared_ptr<T> create(const AlgorithmSpec& resolved) const {
        return std::static_pointer_cast<T>(create_erased(resolved, T::kType));
    }

private:
    using ErasedFactory = std::function<std::shared_ptr<void>(const Config&)>;

    struct Entry {
        Meta meta;
        ErasedFactory factory;
    };

    void add_erased(Meta meta, ErasedFactory factory);
    std::shared_ptr<void> create_erased(const AlgorithmSpec& resolved, std::string_view type) const;
    AlgorithmSpec resolve_stage(const AlgorithmSpec& spec, std::string_view type) const;

    std::map<std::string, std::map<std::string, Entry>, std::less<>> entries_;
    std::map<std::string, std::map<std::string, std::string>, std::less<>> aliases_;
};

template<typename T>
std::shared_ptr<T> Config::create(std::string_view name) const {
    return registry_->create<T>(get_algorithm(name));
}

} // namespace tdc
