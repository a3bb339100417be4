# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Sphinx configuration."""

from mfc_grouping import __version__

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'MFC-Grouping'
copyright = u'2026, MFC-Grouping contributors'
author = u'MFC-Grouping contributors'

release = __version__

exclude_patterns = []

pygments_style = 'sphinx'

todo_include_todos = False


# -- Options for HTML output ----------------------------------------------
html_theme = 'alabaster'

html_theme_options = {
    'description': 'Fair capacitated grouping of students into topics.',
    'github_button': False,
    'show_powered_by': False,
}

html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'relations.html',
        'searchbox.html',
    ]
}

htmlhelp_basename = 'mfc-grouping_namedoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'mfc-grouping.tex', u'MFC-Grouping Documentation',
     author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'mfc-grouping', u'MFC-Grouping Documentation',
     [author], 1)
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (master_doc, 'mfc-grouping', u'MFC-Grouping Documentation',
     author, 'mfc-grouping',
     'Fair capacitated grouping of students into topics.',
     'Miscellaneous'),
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'marshmallow': ('https://marshmallow.readthedocs.io/en/stable/', None),
}

# Autodoc configuraton.
autoclass_content = 'both'
