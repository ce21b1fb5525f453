#include <tdc/core/registry.hpp>

namespace tdc {

Meta::Meta(std::string type, std::string id, std::string description)
    : type_(std::move(type)), id_(std::move(id)), description_(std::move(description)) {
    if(!is_identifier(id_)) throw std::logic_error("invalid algorithm id: " + id_);
}

Meta& Meta::add(ParamDecl p) {
    if(find_param(p.name) || (!p.alias.empty() && find_param(p.alias))) {
        throw std::logic_error("duplicate parameter " + p.name + " in " + id_);
    }
    params_.push_back(std::move(p));
    return *this;
}

Meta& Meta::param_int(std::string name, std::optional<std::int64_t> def, std::string alias) {
    ParamDecl p{std::move(name), std::move(alias), ParamKind::integer, {}, {}};
    if(def) p.default_value = std::to_string(*def);
    return add(std::move(p));
}

Meta& Meta::param_string(std::string name, std::optional<std::string> def, std::string alias) {
    return add(ParamDecl{std::move(name), std::move(alias), ParamKind::string, {}, std::move(def)});
}

Meta& Meta::param_algorithm(std::string name, std::string type, std::optional<std::string> def, std::string alias) {
    return add(ParamDecl{std::move(name), std::move(alias), ParamKind::algorithm, std::move(type), std::move(def)});
}

const ParamDecl* Meta::find_param(std::string_view name_or_alias) const {
    for(const auto& p : params_) {
        if(p.name == name_or_alias || (!p.alias.empty() && p.alias == name_or_alias)) return &p;
    }
    return nullptr;
}

const ArgValue& Config::value(std::string_view name) const {
    const Arg* a = spec_.find(name);
    if(!a) throw SpecError("parameter '" + std::string(name) + "' not set for " + meta_->id());
    return a->value;
}

std::int64_t Config::get_int(std::string_view name) const {
    if(auto v = std::get_if<std::int64_t>(&value(name))) return *v;
    throw SpecError("parameter '" + std::string(name) + "' is not an integer");
}

std::string Config::get_string(std::string_view name) const {
    if(auto v = std::get_if<QuotedString>(&value(name))) return v->value;
    throw SpecError("parameter '" + std::string(name) + "' is not a string");
}

const AlgorithmSpec& Config::get_algorithm(std::string_view name) const {
    if(auto v = std::get_if<SpecBox>(&value(name))) return **v;
    throw SpecError("parameter '" + std::string(name) + "' is not an algorithm");
}

void Registry::add_erased(Meta meta, ErasedFactory factory) {
    auto& by_id = entries_[meta.type()];
    if(by_id.count(meta.id())) {
        throw std::logic_error("duplicate registration of " + meta.type() + " " + meta.id());
    }
    std::string id = meta.id();
    by_id.emplace(std::move(id), Entry{std::move(meta), std::move(factory)});
}

void Registry::add_alias(std::string type, std::string id, std::string spec_text) {
    parse_spec(spec_text); // validate early
    aliases_[std::move(type)][std::move(id)] = std::move(spec_text);
}

const Meta* Registry::find(std::string_view type, std::string_view id) const {
    auto t = entries_.find(type);
    if(t == entries_.end()) return nullptr;
    auto e = t->second.find(std::string(id));
    return e == t->second.end() ? nullptr : &e->second.meta;
}

bool Registry::contains(std::string_view type, std::string_view id) const { return find(type, id) != nullptr; }

bool Registry::accepts(std::string_view type, std::string_view id) const {
    if(contains(type, id)) return true;
    auto t = aliases_.find(type);
    return t != aliases_.end() && t->second.count(std::string(id));
}

std::vector<const Meta*> Registry::list(std::string_view type) const {
    std::vector<const Meta*> out;
    auto t = entries_.find(type);
    if(t != entries_.end()) {
        for(const auto& [id, e] : t->second) out.push_back(&e.meta);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> Registry::aliases(std::string_view type) const {
    std::vector<std::pair<std::string, std::string>> out;
    auto t = aliases_.find(type);
    if(t != aliases_.end()) {
        for(const auto& [id, text] : t->second) out.emplace_back(id, text);
    }
    return out;
}

namespace {

AlgorithmSpec& last_stage(AlgorithmSpec& spec) {
    AlgorithmSpec* s = &spec;
    while(s->next) s = &*s->next;
    return *s;
}

ArgValue parse_default(const ParamDecl& p) {
    switch(p.kind) {
        case ParamKind::integer: return static_cast<std::int64_t>(std::stoll(*p.default_value));
        case ParamKind::string: return QuotedString{*p.default_value};
        case ParamKind::algorithm: return SpecBox(parse_spec(*p.default_value));
    }
    return {};
}

} // namespace

AlgorithmSpec Registry::resolve(const AlgorithmSpec& spec, std::string_view type) const {
    if(spec.next && type != "compressor") {
        throw SpecError("'" + spec.name + "': only compressors can be chained with ':'");
    }
    AlgorithmSpec head = resolve_stage(spec, type);
    if(spec.next) {
        last_stage(head).next = SpecBox(resolve(*spec.next, type));
    }
    return head;
}

AlgorithmSpec Registry::resolve_stage(const AlgorithmSpec& spec, std::string_view type) const {
    if(auto t = aliases_.find(type); t != aliases_.end()) {
        if(auto a = t->second.find(spec.name); a != t->second.end()) {
            if(!spec.args.empty()) throw SpecError("alias '" + spec.name + "' takes no arguments");
            return resolve(parse_spec(a->second), type);
        }
    }
    const Meta* meta = find(type, spec.name);
    if(!meta) {
        throw SpecError("unknown " + std::string(type) + " '" + spec.name + "'");
    }
    const auto& params = meta->params();
    std::vector<std::optional<ArgValue>> slots(params.size());

    for(const auto& arg : spec.args) {
        if(!arg.key) continue;
        const ParamDecl* p = meta->find_param(*arg.key);
        if(!p) throw SpecError(meta->id() + ": unknown parameter '" + *arg.key + "'");
        const auto idx = static_cast<std::size_t>(p - params.data());
        if(slots[idx]) throw SpecError(meta->id() + ": parameter '" + p->name + "' given twice");
        slots[idx] = arg.value;
    }

    for(const auto& arg : spec.args) {
        if(arg.key) continue;
        std::optional<std::size_t> target;
        for(std::size_t i = 0; i < params.size() && !target; ++i) {
            if(slots[i]) continue;
            const auto& p = params[i];
            if(std::holds_alternative<std::int64_t>(arg.value)) {
                if(p.kind == ParamKind::integer) target = i;
            } else if(std::holds_alternative<QuotedString>(arg.value)) {
                if(p.kind == ParamKind::string) target = i;
            } else if(p.kind == ParamKind::algorithm && accepts(p.type, std::get<SpecBox>(arg.value)->name)) {
                target = i;
            }
        }
        if(!target) {
            std::string what = std::holds_alternative<SpecBox>(arg.value)
                                   ? "'" + std::get<SpecBox>(arg.value)->name + "'"
                                   : std::string("positional argument");
            throw SpecError(meta->id() + ": no parameter accepts " + what);
        }
        slots[*target] = arg.value;
    }

    AlgorithmSpec out;
    out.name = meta->id();
    for(std::size_t i = 0; i < params.size(); ++i) {
        const auto& p = params[i];
        if(!slots[i]) {
            if(!p.default_value) throw SpecError(meta->id() + ": missing parameter '" + p.name + "'");
            slots[i] = parse_default(p);
        }
        ArgValue v = std::move(*slots[i]);
        switch(p.kind) {
            case ParamKind::integer:
                if(!std::holds_alternative<std::int64_t>(v)) {
                    throw SpecError(meta->id() + ": parameter '" + p.name + "' expects an integer");
                }
                break;
            case ParamKind::string:
                if(!std::holds_alternative<QuotedString>(v)) {
                    throw SpecError(meta->id() + ": parameter '" + p.name + "' expects a quoted string");
                }
                break;
            case ParamKind::algorithm: {
                auto box = std::get_if<SpecBox>(&v);
                if(!box) throw SpecError(meta->id() + ": parameter '" + p.name + "' expects a " + p.type);
                if(!accepts(p.type, (*box)->name)) {
                    throw SpecError(meta->id() + ": parameter '" + p.name + "' expects a " + p.type + ", got '" +
                                    (*box)->name + "'");
                }
                v = SpecBox(resolve(**box, p.type));
                break;
            }
        }
        out.args.push_back(Arg{p.name, std::move(v)});
    }
    return out;
}

std::shared_ptr<void> Registry::create_erased(const AlgorithmSpec& resolved, std::string_view type) const {
    auto t = entries_.find(type);
    if(t == entries_.end()) throw SpecError("no algorithms of type " + std::string(type));
    auto e = t->second.find(resolved.name);
    if(e == t->second.end()) throw SpecError("unknown " + std::string(type) + " '" + resolved.name + "'");
    Config config(*this, e->second.meta, resolved);
    return e->second.factory(config);
}

} // namespace tdc
