#pragma once

#include <string>
#include <vector>

namespace syzlab {

struct CheckItem
{
	std::string name;
	bool pass = false;
	std::string expected;
	std::string computed;
	std::string note;
};

struct CheckList
{
	std::vector<CheckItem> items;

	bool all_pass() const
	{
		for (const auto& it : items)
			if (!it.pass)
				return false;
		return true;
	}

	void add(std::string name, bool pass, std::string expected = "",
	         std::string computed = "", std::string note = "")
	{
		items.push_back({std::move(name), pass, std::move(expected),
		                 std::move(computed), std::move(note)});
	}

	void extend(const CheckList& other)
	{
		items.insert(items.end(), other.items.begin(), other.items.end());
	}

	const CheckItem* find(const std::string& name) const
	{
		for (const auto& it : items)
			if (it.name == name)
				return &it;
		return nullptr;
	}
};

} // namespace syzlab
