#pragma once

#include "splitting_type.hpp"
#include "int_matrix.hpp"
#include "class_group.hpp"
#include "classifier.hpp"
#include "extension_space.hpp"
#include "text_io.hpp"
