#include "nichols/weyl.hpp"

#include "nichols/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace nichols {

std::vector<MultiDegree> reflection_map(const BraidingMatrix& q, int i)
{
    const int n = q.rank();
    std::vector<MultiDegree> cols;
    cols.reserve(n);
    for (int j = 0; j < n; ++j) {
        MultiDegree image = MultiDegree::unit(n, j);
        if (j == i) {
            image[i] = -1;
        } else {
            auto m = cartan_entry(q, i, j);
            if (!m)
                throw UndefinedCartanEntry(i, j);
            image[i] = *m;
        }
        cols.push_back(std::move(image));
    }
    return cols;
}

namespace {

BraidingMatrix apply_degree_map(const BraidingMatrix& q, const std::vector<MultiDegree>& cols)
{
    const int n = q.rank();
    BraidingMatrix r(q.field(), n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            r.set(j, k, bicharacter(q, cols[j], cols[k]));
    return r;
}

} // namespace

BraidingMatrix reflect(const BraidingMatrix& q, int i)
{
    return apply_degree_map(q, reflection_map(q, i));
}

std::string to_string(RootSystemResult::Status status)
{
    switch (status) {
    case RootSystemResult::Status::Finite: return "finite";
    case RootSystemResult::Status::Diverged: return "diverged";
    case RootSystemResult::Status::UndefinedM: return "undefined_m";
    case RootSystemResult::Status::Inconsistent: return "inconsistent";
    }
    return "unknown";
}

namespace {

struct GroupoidObject {
    BraidingMatrix q;
    // per vertex: reflected object index and degree map, filled lazily
    std::vector<std::optional<std::pair<int, std::vector<MultiDegree>>>> reflections;
};

struct State {
    int object;
    std::vector<MultiDegree> map; // images of the simple roots of `object` in the start object
    std::vector<int> path;
};

std::vector<int> flatten(int object, const std::vector<MultiDegree>& map)
{
    std::vector<int> key{object};
    for (const auto& col : map)
        key.insert(key.end(), col.values().begin(), col.values().end());
    return key;
}

} // namespace

RootSystemResult positive_roots(const BraidingMatrix& q, int cap)
{
    const int n = q.rank();
    if (cap < n)
        throw std::invalid_argument("positive_roots: cap must be at least the rank");
    RootSystemResult result;
    result.cap = cap;
    const long state_limit = 100L * cap;

    std::vector<GroupoidObject> objects;
    std::map<std::string, int> object_index;
    auto intern = [&](BraidingMatrix m) {
        std::string key = dynkin_diagram(m).key();
        auto it = object_index.find(key);
        if (it != object_index.end())
            return it->second;
        int idx = static_cast<int>(objects.size());
        objects.push_back({std::move(m), std::vector<std::optional<std::pair<int, std::vector<MultiDegree>>>>(n)});
        object_index.emplace(std::move(key), idx);
        return idx;
    };

    std::set<MultiDegree> roots;
    std::set<std::vector<int>> seen;
    std::deque<State> queue;
    {
        std::vector<MultiDegree> id;
        for (int j = 0; j < n; ++j)
            id.push_back(MultiDegree::unit(n, j));
        State start{intern(q), std::move(id), {}};
        seen.insert(flatten(start.object, start.map));
        queue.push_back(std::move(start));
    }

    auto finish = [&](RootSystemResult::Status status) {
        result.status = status;
        result.roots.assign(roots.begin(), roots.end());
        result.objects = static_cast<int>(objects.size());
        result.morphisms = static_cast<int>(seen.size());
        return result;
    };

    while (!queue.empty()) {
        State state = std::move(queue.front());
        queue.pop_front();
        for (const auto& image : state.map) {
            if (image.is_nonnegative())
                roots.insert(image);
            else if (!(-image).is_nonnegative()) {
                result.mixed_root = image;
                result.witness_path = state.path;
                return finish(RootSystemResult::Status::Inconsistent);
            }
        }
        if (static_cast<int>(roots.size()) > cap)
            return finish(RootSystemResult::Status::Diverged);

        for (int i = 0; i < n; ++i) {
            auto& slot = objects[state.object].reflections[i];
            if (!slot) {
                std::vector<MultiDegree> cols;
                try {
                    cols = reflection_map(objects[state.object].q, i);
                } catch (const UndefinedCartanEntry& e) {
                    result.witness = std::make_pair(e.i(), e.j());
                    result.witness_path = state.path;
                    return finish(RootSystemResult::Status::UndefinedM);
                }
                int target = intern(apply_degree_map(objects[state.object].q, cols));
                // `objects` may have reallocated
                objects[state.object].reflections[i] = std::make_pair(target, std::move(cols));
                if (static_cast<int>(objects.size()) > cap)
                    return finish(RootSystemResult::Status::Diverged);
            }
            const auto& [target, cols] = *objects[state.object].reflections[i];
            std::vector<MultiDegree> next(n, MultiDegree(n));
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (cols[j][k] != 0)
                        next[j] += cols[j][k] * state.map[k];
            if (!seen.insert(flatten(target, next)).second)
                continue;
            if (static_cast<long>(seen.size()) > state_limit)
                return finish(RootSystemResult::Status::Diverged);
            std::vector<int> path = state.path;
            path.push_back(i);
            queue.push_back({target, std::move(next), std::move(path)});
        }
    }
    return finish(RootSystemResult::Status::Finite);
}

} // namespace nichols
