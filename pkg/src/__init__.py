# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""ReuseCache - Semantic Image Caching Toolkit"""
