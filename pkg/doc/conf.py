# -*- coding: utf-8 -*-
# The ExtremalCliques library provides exact tools to study the minimum number
# of cliques in graphs of given order and minimum degree.
#
# Copyright (C) 2017-2022 The QC-Devs Community
#
# This file is part of ExtremalCliques.
#
# ExtremalCliques is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 3
# of the License, or (at your option) any later version.
#
# ExtremalCliques is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, see <http://www.gnu.org/licenses/>
#
# --
# ExtremalCliques documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath('../'))

from ExtremalCliques._version import get_versions  # noqa: E402


# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
    'numpydoc',
    'sphinx.ext.doctest',
    # for adding "copy to clipboard" buttons to all text/code boxes
    'sphinx_copybutton',
]

# the API pages under api/ list their members with automodule
numpydoc_show_class_members = False
autodoc_member_order = 'bysource'

templates_path = ['_templates']

# The master toctree document.
master_doc = 'index'

# General information about the project.
project = 'ExtremalCliques'
copyright = '2022, The QC-Devs Community'
author = 'The QC-Devs Community'

# The short X.Y version and the full version.
version = get_versions()['version']
release = version

language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = []
html_sidebars = {
    '**': [
        'relations.html',  # needs 'show_related': True theme option to display
        'searchbox.html',
    ]
}
htmlhelp_basename = 'ExtremalCliquesdoc'


# -- Options for LaTeX, manual page and Texinfo output --------------------

latex_documents = [
    (master_doc, 'ExtremalCliques.tex', 'ExtremalCliques Documentation',
     'The QC-Devs Community', 'manual'),
]
man_pages = [
    (master_doc, 'extremal-cliques', 'ExtremalCliques Documentation', [author], 1)
]
texinfo_documents = [
    (master_doc, 'ExtremalCliques', 'ExtremalCliques Documentation', author, 'ExtremalCliques',
     'Exact clique counts in graphs of given order and minimum degree.', 'Miscellaneous'),
]
