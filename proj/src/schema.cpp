#include "sitplan/schema.hpp"

namespace sitplan {

int PlanningTask::find_schema(const std::string& name) const {
    for (size_t i = 0; i < schemas.size(); ++i) {
        if (schemas[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

int PlanningTask::find_object(const std::string& name) const {
    for (size_t i = 0; i < obj_names.size(); ++i) {
        if (obj_names[i] == name) return static_cast<int>(i);
    }
    return -1;
}

int PlanningTask::find_predicate(const std::string& name) const {
    for (size_t i = 0; i < pred_names.size(); ++i) {
        if (pred_names[i] == name) return static_cast<int>(i);
    }
    return -1;
}

std::string PlanningTask::to_string(const GroundAtom& a) const {
    std::string s = "(" + pred_names[a.pred];
    for (ObjId o : a.args) {
        s += ' ';
        s += obj_names[o];
    }
    s += ')';
    return s;
}

std::string PlanningTask::to_string(const GroundAction& a) const {
    std::string s = "(" + schemas[a.schema].name;
    for (ObjId o : a.args) {
        s += ' ';
        s += obj_names[o];
    }
    s += ')';
    return s;
}

}  // namespace sitplan
