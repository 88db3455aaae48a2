#pragma once

#include "modcat/bigint.hpp"
#include "modcat/binary_tree.hpp"
#include "modcat/catalan_objects.hpp"
#include "modcat/counting.hpp"
#include "modcat/dyck_cycle.hpp"
#include "modcat/oracle.hpp"
#include "modcat/plane_tree.hpp"
#include "modcat/reference_table.hpp"
#include "modcat/rewrite.hpp"
#include "modcat/series.hpp"
